// Shared test plumbing: fixture loading and a fetch stub that replays
// captured service responses while recording every request.

import { readFileSync } from "fs";
import { fileURLToPath } from "url";
import { vi } from "vitest";

export function fixture<T>(name: string): T {
  const path = fileURLToPath(new URL(`./fixtures/${name}`, import.meta.url));
  return JSON.parse(readFileSync(path, "utf-8")) as T;
}

export function fixtureBytes(name: string): string {
  const path = fileURLToPath(new URL(`./fixtures/${name}`, import.meta.url));
  return readFileSync(path, "utf-8");
}

export interface RecordedCall {
  url: string;
  method: string;
  body: unknown;
}

export interface StubbedFetch {
  calls: RecordedCall[];
  respondWith(url: string, body: unknown, status?: number): void;
}

export function stubFetch(): StubbedFetch {
  const routes = new Map<string, { body: unknown; status: number }>();
  const calls: RecordedCall[] = [];

  vi.stubGlobal("fetch", async (url: string, init?: RequestInit) => {
    calls.push({
      url,
      method: init?.method ?? "GET",
      body: init?.body ? JSON.parse(init.body as string) : null,
    });
    const route = routes.get(url);
    if (!route) {
      throw new TypeError(`no stubbed route for ${url}`);
    }
    return {
      ok: route.status < 400,
      status: route.status,
      json: async () => JSON.parse(JSON.stringify(route.body)),
    };
  });

  return {
    calls,
    respondWith(url, body, status = 200) {
      routes.set(url, { body, status });
    },
  };
}
