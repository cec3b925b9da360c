import { ApiClient, ServerError } from "./api.js";
import type { Label, Mode, ServerState } from "./types.js";
import { labelKey } from "./types.js";

export interface Toast {
  error: string;
  message: string;
}

// Mediates between clicks and the server.  Keeps exactly one request in
// flight; queued user actions run in order.  Affordances are computed
// from the last server state only, so an enabled control never draws a
// precondition error from the server.
export class ExplorerController {
  state: ServerState | null = null;
  mode: Mode = "mutate";
  toasts: Toast[] = [];
  onChange: () => void = () => {};

  private chain: Promise<void> = Promise.resolve();

  constructor(readonly api: ApiClient) {}

  private enqueue(action: () => Promise<ServerState>): Promise<void> {
    const step = this.chain.then(async () => {
      try {
        this.state = await action();
      } catch (err) {
        if (err instanceof ServerError) {
          this.toasts.push({ error: err.name_, message: err.message });
        } else {
          throw err;
        }
      }
      this.onChange();
    });
    this.chain = step;
    return step;
  }

  refresh(): Promise<void> {
    return this.enqueue(() => this.api.state());
  }

  load(collection: { k: number; n: number; labels: Label[] }): Promise<void> {
    return this.enqueue(() => this.api.load(collection));
  }

  undo(): Promise<void> {
    return this.enqueue(() => this.api.undo());
  }

  setMode(mode: Mode): void {
    this.mode = mode;
    this.onChange();
  }

  // -- affordances ----------------------------------------------------------

  vertexEnabled(label: Label): boolean {
    if (!this.state) return false;
    const key = labelKey(label);
    if (this.mode === "mutate") {
      const m = this.state.mutability.find((x) => labelKey(x.label) === key);
      return m !== undefined && m.mutable;
    }
    if (this.mode === "orbitMutate") {
      const orbit = this.state.orbits.find((o) =>
        o.labels.some((l) => labelKey(l) === key),
      );
      return orbit !== undefined && orbit.mutable;
    }
    const cut = this.state.cut;
    if (!cut || !cut.valid) return false;
    return cut.strictVertices.some((v) => labelKey(v.label) === key);
  }

  arrowEnabled(arrowId: number): boolean {
    if (!this.state || this.mode !== "cutEdit") return false;
    const fr = this.frozenKeys();
    const arrow = this.state.quiver.arrows.find((a) => a.id === arrowId);
    if (!arrow) return false;
    // only arrows of the frozen-free quotient participate in cuts
    return !fr.has(labelKey(arrow.src)) && !fr.has(labelKey(arrow.tgt));
  }

  orbitOf(label: Label): Label[] | null {
    if (!this.state) return null;
    const key = labelKey(label);
    const orbit = this.state.orbits.find((o) =>
      o.labels.some((l) => labelKey(l) === key),
    );
    return orbit ? orbit.labels : null;
  }

  private frozenKeys(): Set<string> {
    const out = new Set<string>();
    for (const v of this.state?.quiver.vertices ?? []) {
      if (v.frozen) out.add(labelKey(v.label));
    }
    return out;
  }

  // -- interactions ---------------------------------------------------------

  clickVertex(label: Label): Promise<void> {
    if (!this.vertexEnabled(label)) {
      return Promise.resolve();
    }
    if (this.mode === "mutate") {
      return this.enqueue(() => this.api.mutate(label));
    }
    if (this.mode === "orbitMutate") {
      return this.enqueue(() => this.api.orbitMutate(label));
    }
    return this.enqueue(() => this.api.cutMutate(label));
  }

  clickArrow(arrowId: number): Promise<void> {
    if (this.mode !== "cutEdit" || !this.state) {
      return Promise.resolve();
    }
    const current = new Set(this.state.cut?.arrows ?? []);
    if (current.has(arrowId)) {
      current.delete(arrowId);
    } else {
      current.add(arrowId);
    }
    return this.enqueue(() => this.api.setCut([...current].sort((a, b) => a - b)));
  }

  // raw server actions, used by scripted sessions
  forceMutate(label: Label): Promise<void> {
    return this.enqueue(() => this.api.mutate(label));
  }

  paintCut(arrows: number[]): Promise<void> {
    return this.enqueue(() => this.api.setCut(arrows));
  }

  // -- status panel data ----------------------------------------------------

  sigmaCycleType(): string {
    const sigma = this.state?.report.sigma;
    if (!sigma) return "-";
    return sigma
      .map((c) => c.length)
      .sort((a, b) => b - a)
      .join("+");
  }

  statusLines(): string[] {
    if (!this.state) return ["no collection loaded"];
    const r = this.state.report;
    const lines = [
      `(k, n) = (${r.k}, ${r.n}), ${r.memberCount} labels`,
      `symmetric: ${r.symmetric}`,
      `self-injective: ${r.selfInjective}`,
      `sigma cycle type: ${this.sigmaCycleType()}`,
      `Nakayama order: ${r.nakayamaOrder ?? "-"}`,
      `dim = ${r.dimTotal}; cuts: ${r.cuts.count} (${r.cuts.homogeneousCount} homogeneous)`,
    ];
    const cut = this.state.cut;
    if (cut) {
      lines.push(
        `cut: ${cut.arrows.length} arrows, valid: ${cut.valid}, homogeneous: ${cut.homogeneous}`,
      );
    }
    return lines;
  }
}
