import type { ExplorerController } from "./controller.js";
import type { Label, QuiverJson, ServerState } from "./types.js";
import { labelKey } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const SIZE = 640;

const ORBIT_COLORS = [
  "#4c78a8",
  "#f58518",
  "#54a24b",
  "#b279a2",
  "#e45756",
  "#72b7b2",
  "#eeca3b",
  "#9d755d",
];

function el(tag: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) {
    node.setAttribute(k, v);
  }
  return node;
}

function scalePositions(quiver: QuiverJson): Map<string, [number, number]> {
  const missing = quiver.vertices.some(
    (v) => !Array.isArray(v.pos) || v.pos.length !== 2 || v.pos.some((x) => !isFinite(x)),
  );
  const out = new Map<string, [number, number]>();
  if (missing) {
    // fallback layout: ring placement when the server sent no geometry
    quiver.vertices.forEach((v, i) => {
      const theta = (2 * Math.PI * i) / quiver.vertices.length;
      out.set(labelKey(v.label), [
        SIZE / 2 + Math.cos(theta) * (SIZE / 2 - 60),
        SIZE / 2 + Math.sin(theta) * (SIZE / 2 - 60),
      ]);
    });
    return out;
  }
  let radius = 1e-9;
  for (const v of quiver.vertices) {
    radius = Math.max(radius, Math.hypot(v.pos[0], v.pos[1]));
  }
  const s = (SIZE / 2 - 40) / radius;
  for (const v of quiver.vertices) {
    out.set(labelKey(v.label), [SIZE / 2 + v.pos[0] * s, SIZE / 2 - v.pos[1] * s]);
  }
  return out;
}

function orbitTints(state: ServerState): Map<string, string> {
  const tints = new Map<string, string>();
  const sigma = state.report.sigma;
  if (!sigma) return tints;
  sigma.forEach((cycle, i) => {
    for (const label of cycle) {
      tints.set(labelKey(label), ORBIT_COLORS[i % ORBIT_COLORS.length]);
    }
  });
  return tints;
}

// Rebuilds the scene from the last server state; positions come straight
// from the embedding the server computed.
export function renderQuiver(root: SVGSVGElement, ctl: ExplorerController): void {
  root.innerHTML = "";
  const state = ctl.state;
  if (!state) return;
  const quiver = state.quiver;
  const pos = scalePositions(quiver);
  const tints = orbitTints(state);
  const cutArrows = new Set(state.cut?.arrows ?? []);

  const defs = el("defs", {});
  const marker = el("marker", {
    id: "arrowhead",
    viewBox: "0 0 10 10",
    refX: "9",
    refY: "5",
    markerWidth: "7",
    markerHeight: "7",
    orient: "auto-start-reverse",
  });
  marker.appendChild(el("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#333" }));
  defs.appendChild(marker);
  root.appendChild(defs);

  // dashed boundary circle through the frozen vertices
  const frozen = quiver.vertices.filter((v) => v.frozen);
  if (frozen.length > 0) {
    let r = 0;
    for (const v of frozen) {
      const p = pos.get(labelKey(v.label))!;
      r = Math.max(r, Math.hypot(p[0] - SIZE / 2, p[1] - SIZE / 2));
    }
    root.appendChild(
      el("circle", {
        cx: String(SIZE / 2),
        cy: String(SIZE / 2),
        r: String(r),
        fill: "none",
        stroke: "#999",
        "stroke-dasharray": "6 5",
      }),
    );
  }

  for (const arrow of quiver.arrows) {
    const a = pos.get(labelKey(arrow.src))!;
    const b = pos.get(labelKey(arrow.tgt))!;
    const dx = b[0] - a[0];
    const dy = b[1] - a[1];
    const len = Math.hypot(dx, dy) || 1;
    const trim = 16;
    const x1 = a[0] + (dx / len) * trim;
    const y1 = a[1] + (dy / len) * trim;
    const x2 = b[0] - (dx / len) * trim;
    const y2 = b[1] - (dy / len) * trim;
    const line = el("line", {
      x1: String(x1),
      y1: String(y1),
      x2: String(x2),
      y2: String(y2),
      stroke: "#333",
      "stroke-width": "1.6",
      "marker-end": "url(#arrowhead)",
    });
    if (cutArrows.has(arrow.id)) {
      line.setAttribute("stroke-dasharray", "4 4");
    }
    line.classList.add("arrow");
    if (ctl.arrowEnabled(arrow.id)) {
      line.classList.add("clickable");
    }
    line.dataset.arrowId = String(arrow.id);
    line.addEventListener("click", () => void ctl.clickArrow(arrow.id));
    root.appendChild(line);
  }

  for (const v of quiver.vertices) {
    const p = pos.get(labelKey(v.label))!;
    const group = el("g", {});
    const enabled = !v.frozen && ctl.vertexEnabled(v.label);
    const circle = el("circle", {
      cx: String(p[0]),
      cy: String(p[1]),
      r: "15",
      fill: v.frozen ? "#eee" : tints.get(labelKey(v.label)) ?? "#fff",
      "fill-opacity": v.frozen ? "1" : "0.45",
      stroke: enabled ? "#111" : "#aaa",
      "stroke-width": enabled ? "2" : "1",
    });
    group.classList.add("vertex");
    if (enabled) group.classList.add("clickable");
    group.dataset.label = labelKey(v.label);
    const text = el("text", {
      x: String(p[0]),
      y: String(p[1] + 4),
      "text-anchor": "middle",
      "font-size": "11",
    });
    text.textContent = v.label.join("");
    group.appendChild(circle);
    group.appendChild(text);
    group.addEventListener("click", () => {
      if (!v.frozen) void ctl.clickVertex(v.label as Label);
    });
    root.appendChild(group);
  }
}

export function renderStatus(panel: HTMLElement, ctl: ExplorerController): void {
  panel.innerHTML = "";
  for (const line of ctl.statusLines()) {
    const div = document.createElement("div");
    div.textContent = line;
    panel.appendChild(div);
  }
}

export function renderToasts(container: HTMLElement, ctl: ExplorerController): void {
  container.innerHTML = "";
  for (const toast of ctl.toasts.slice(-3)) {
    const div = document.createElement("div");
    div.className = "toast";
    div.textContent = `${toast.error}: ${toast.message}`;
    container.appendChild(div);
  }
}
