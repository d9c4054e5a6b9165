export interface InvariantDescriptor {
  name: string;
  kind: 'numeric' | 'boolean';
  description: string;
}

export interface ConjectureDto {
  id: string;
  statement: string;
  hypothesis: string[];
  target: string;
  other: string;
  direction: 'upper' | 'lower';
  m: string; // exact rational "p/q" — never reformatted client-side
  b: string;
  touch_number: number;
  equality_set: string[];
  scope_set: string[];
}

export interface FilterReportDto {
  input_count: number;
  output_count: number;
  removed: { id: string; reason: string }[];
}

export interface ConjectureRunDto {
  conjectures: ConjectureDto[];
  filter_report: FilterReportDto;
  total: number;
}

export interface HeuristicToggles {
  sort: boolean;
  theo: boolean;
  dalmatian: boolean;
  known_filter: boolean;
}

export interface ConjectureRequest {
  target: string;
  direction: 'upper' | 'lower';
  hypothesis_filter?: string[];
  heuristics: HeuristicToggles;
  limit?: number;
}

export interface FalsificationDto {
  graph_id: string;
  falsified: {
    conjecture_id: string;
    statement: string;
    lhs: number;
    rhs: string;
  }[];
  survived_count: number;
}

export interface GraphSummaryDto {
  id: string;
  n: number;
  size: number;
}
