// Wire types mirroring the service API documents.

export interface ValueDoc {
  id: string;
  low?: number;
  high?: number;
}

export interface AttributeDoc {
  id: string;
  kind: "ordinal" | "nominal";
  values: ValueDoc[];
}

export interface TechniqueDoc {
  id: string;
  display_name: string;
  category: string;
  description: string;
  aliases: string[];
}

export interface TaxonomyDoc {
  dataset_version: string;
  threshold: string;
  techniques: TechniqueDoc[];
  dimensions: {
    project: AttributeDoc[];
    people: AttributeDoc[];
    process: AttributeDoc[];
  };
}

export interface DecisionDoc {
  technique: string;
  verdict: "keep" | "exclude";
  decided_by: "user-view" | "analyst-view";
  reason: string;
}

export interface ProfilePayload {
  label: string;
  project: Record<string, string>;
  people: Record<string, string[]>;
  process_model: string | null;
  feasibility: DecisionDoc[];
}

export interface EvidenceDoc {
  matrix: "project" | "people" | "process";
  attribute: string;
  value: string;
  cell: string;
}

export interface RecommendationDoc {
  label: string;
  dataset_version: string;
  per_matrix: {
    project: string[];
    people: string[];
    process: string[];
  };
  union: string[];
  decisions: DecisionDoc[];
  final: string[];
  trace: Record<string, EvidenceDoc[]>;
  warnings: string[];
}

export interface DiffDoc {
  dataset_version: string;
  added: string[];
  removed: string[];
  unchanged: string[];
}

export interface ApiErrorDoc {
  code: string;
  field: string | null;
  message: string;
}
