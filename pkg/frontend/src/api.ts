// Thin fetch wrapper for the service API. The client never post-processes
// set contents; documents are handed to callers verbatim.

import type {
  ApiErrorDoc,
  DiffDoc,
  ProfilePayload,
  RecommendationDoc,
  TaxonomyDoc,
} from "./types.js";

export class ApiError extends Error {
  constructor(public readonly detail: ApiErrorDoc) {
    super(detail.message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(body as ApiErrorDoc);
  }
  return body as T;
}

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  getTaxonomy(): Promise<TaxonomyDoc> {
    return request(`${this.baseUrl}/api/taxonomy`);
  }

  getMeta(): Promise<{ dataset_version: string; threshold: string }> {
    return request(`${this.baseUrl}/api/dataset/meta`);
  }

  recommend(payload: ProfilePayload, signal?: AbortSignal): Promise<RecommendationDoc> {
    return request(`${this.baseUrl}/api/recommend`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
      signal,
    });
  }

  whatIf(profileA: ProfilePayload, profileB: ProfilePayload): Promise<DiffDoc> {
    return request(`${this.baseUrl}/api/whatif`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ profile_a: profileA, profile_b: profileB }),
    });
  }
}
