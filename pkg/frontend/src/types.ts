// Payload types of the session service.  The UI carries no combinatorics:
// every displayed fact is read from these responses.

export type Label = number[];

export interface QuiverVertex {
  label: Label;
  frozen: boolean;
  pos: [number, number];
}

export interface QuiverArrow {
  id: number;
  src: Label;
  tgt: Label;
}

export interface QuiverJson {
  k: number;
  n: number;
  vertices: QuiverVertex[];
  arrows: QuiverArrow[];
  faces: { arrows: number[]; sign: number }[];
}

export interface CutReport {
  arrows: number[];
  valid: boolean;
  homogeneous: boolean;
}

export interface Report {
  k: number;
  n: number;
  memberCount: number;
  maximal: boolean;
  symmetric: boolean;
  selfInjective: boolean;
  sigma: Label[][] | null;
  nakayamaOrder: number | null;
  dimTotal: number;
  vertices: Label[];
  dimMatrix: number[][];
  cuts: { count: number; homogeneousCount: number; enoughCuts: boolean };
  cut?: CutReport;
}

export interface Mutability {
  label: Label;
  valency: number;
  mutable: boolean;
}

export interface OrbitInfo {
  labels: Label[];
  independent: boolean;
  mutable: boolean;
}

export interface StrictVertex {
  label: Label;
  kind: "source" | "sink";
}

export interface CutState {
  arrows: number[];
  valid: boolean;
  homogeneous: boolean;
  strictVertices: StrictVertex[];
}

export interface ServerState {
  collection: { k: number; n: number; labels: Label[] };
  quiver: QuiverJson;
  report: Report;
  mutability: Mutability[];
  orbits: OrbitInfo[];
  cut: CutState | null;
  undoDepth: number;
}

export interface ApiError {
  error: string;
  message: string;
}

export type Mode = "mutate" | "orbitMutate" | "cutEdit";

export const labelKey = (label: Label): string => label.join(",");
