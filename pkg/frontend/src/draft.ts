// Client-side state: an in-progress profile and the feasibility board.
//
// The draft only records selections and validates them against the
// taxonomy the service supplied; it never decides which techniques a
// selection maps to. Every set shown in the UI comes from a service
// response.

import type {
  DecisionDoc,
  ProfilePayload,
  RecommendationDoc,
  TaxonomyDoc,
} from "./types.js";

export class ProfileDraft {
  label = "";
  project = new Map<string, string>(); // attribute id -> value id
  people = new Map<string, Set<string>>(); // role -> traits
  processModel: string | null = null;
  dirty = false;
  lastResponse: RecommendationDoc | null = null;

  constructor(private readonly taxonomy: TaxonomyDoc) {}

  setProjectValue(attribute: string, value: string | null): void {
    const doc = this.taxonomy.dimensions.project.find((a) => a.id === attribute);
    if (!doc) {
      throw new Error(`unknown project attribute: ${attribute}`);
    }
    if (value === null) {
      this.project.delete(attribute);
    } else {
      if (!doc.values.some((v) => v.id === value)) {
        throw new Error(`unknown value ${value} for attribute ${attribute}`);
      }
      this.project.set(attribute, value);
    }
    this.dirty = true;
  }

  toggleTrait(role: string, trait: string, selected: boolean): void {
    const doc = this.taxonomy.dimensions.people.find((a) => a.id === role);
    if (!doc || !doc.values.some((v) => v.id === trait)) {
      throw new Error(`unknown trait ${role}:${trait}`);
    }
    const traits = this.people.get(role) ?? new Set<string>();
    if (selected) {
      traits.add(trait);
    } else {
      traits.delete(trait);
    }
    this.people.set(role, traits);
    this.dirty = true;
  }

  setProcessModel(model: string | null): void {
    if (model !== null) {
      const doc = this.taxonomy.dimensions.process.find(
        (a) => a.id === "process-model",
      );
      if (!doc || !doc.values.some((v) => v.id === model)) {
        throw new Error(`unknown process model: ${model}`);
      }
    }
    this.processModel = model;
    this.dirty = true;
  }

  clear(): void {
    this.project.clear();
    this.people.clear();
    this.processModel = null;
    this.dirty = true;
  }

  isEmpty(): boolean {
    const traitCount = [...this.people.values()].reduce((n, s) => n + s.size, 0);
    return this.project.size === 0 && traitCount === 0 && this.processModel === null;
  }

  toPayload(decisions: DecisionDoc[] = []): ProfilePayload {
    const people: Record<string, string[]> = {};
    for (const [role, traits] of this.people) {
      if (traits.size > 0) {
        people[role] = [...traits].sort();
      }
    }
    return {
      label: this.label,
      project: Object.fromEntries([...this.project.entries()].sort()),
      people,
      process_model: this.processModel,
      feasibility: decisions,
    };
  }
}

// Step-4 feasibility judgments over the service-reported union.
export class DecisionBoard {
  private decisions = new Map<string, DecisionDoc>();
  private union = new Set<string>();

  // Re-anchor the board to a fresh union; decisions about techniques
  // that left the union are dropped.
  setUnion(union: string[]): void {
    this.union = new Set(union);
    for (const technique of [...this.decisions.keys()]) {
      if (!this.union.has(technique)) {
        this.decisions.delete(technique);
      }
    }
  }

  unionMembers(): string[] {
    return [...this.union].sort();
  }

  exclude(technique: string, reason: string, decidedBy: DecisionDoc["decided_by"]): void {
    if (!this.union.has(technique)) {
      throw new Error(`cannot decide on ${technique}: not in the union set`);
    }
    if (!reason.trim()) {
      throw new Error(`excluding ${technique} requires a reason`);
    }
    this.decisions.set(technique, {
      technique,
      verdict: "exclude",
      decided_by: decidedBy,
      reason,
    });
  }

  keep(technique: string, reason: string, decidedBy: DecisionDoc["decided_by"]): void {
    if (!this.union.has(technique)) {
      throw new Error(`cannot decide on ${technique}: not in the union set`);
    }
    this.decisions.set(technique, {
      technique,
      verdict: "keep",
      decided_by: decidedBy,
      reason,
    });
  }

  reset(technique: string): void {
    this.decisions.delete(technique);
  }

  verdictFor(technique: string): DecisionDoc["verdict"] | null {
    return this.decisions.get(technique)?.verdict ?? null;
  }

  list(): DecisionDoc[] {
    return [...this.decisions.values()].sort((a, b) =>
      a.technique.localeCompare(b.technique),
    );
  }
}

// Latest-wins gate for in-flight recommend requests: stale responses
// are dropped, never rendered.
export class LatestWins<T> {
  private sequence = 0;

  async run(task: () => Promise<T>): Promise<T | null> {
    const ticket = ++this.sequence;
    const result = await task();
    return ticket === this.sequence ? result : null;
  }
}
