/**
 * Certificate coverage maps.
 *
 * S3 certificates: every subdivision leaf is drawn in normalized volume
 * coordinates, colored by method (direct hits shaded by depth, balancing
 * reductions grey, failures red); the rest of the 10%-pentagon is rastered
 * by the reduction step that covers it, so the drawn union is the whole
 * pentagonal domain.  H3 band certificates: one strip per sweep row.
 */

import { Frame, Shape, makeFrame, renderSvg } from "./svg.js";

export interface CertNode {
  method?: string;
  outcome?: string;
  depth?: number;
  region: Record<string, any>;
  children?: CertNode[];
  reduction?: string;
  [key: string]: any;
}

export interface Certificate {
  space: string;
  outcome: string;
  tree: CertNode;
  [key: string]: any;
}

export class CertificateSchemaError extends Error {}

export function parseNumber(s: string | number): number {
  if (typeof s === "number") return s;
  if (s.includes("/")) {
    const [n, d] = s.split("/");
    return Number(n) / Number(d);
  }
  return Number(s);
}

function leafColor(node: CertNode): string {
  if (node.outcome === "failed") return "#d62728";
  if (node.method === "reduction") return "#bdbdbd";
  const depth = Math.min(node.depth ?? 0, 10);
  const light = 225 - 14 * depth;
  return `rgb(${light - 90},${light},${light - 40})`;
}

/** Reduction-step classifier for the pentagon overlay (S3, normalized). */
export function reductionStep(v: number, w: number): string {
  const u = 1 - v - w;
  if (Math.min(v, w, u) < 0.1) return "outside";
  if (v > 2 * w || v > 2 * u) return "hutchings_balancing";
  if (v <= w && v <= 1 - 2 * w) return "s3_computer";
  if (w < v && v <= 2 * w) return "s_balancing";
  return "permutation";
}

const STEP_FILL: Record<string, string> = {
  hutchings_balancing: "#ffd9a8",
  s_balancing: "#ffe9c9",
  permutation: "#e4d3f0",
  s3_computer: "#cfe8cf",
};

function* leaves(node: CertNode): Generator<CertNode> {
  if (!node.children || node.children.length === 0) {
    yield node;
    return;
  }
  if (node.method === "sweep_band") {
    yield node;
    return;
  }
  for (const c of node.children) {
    yield* leaves(c);
  }
}

function regionShape(node: CertNode): Shape | null {
  const r = node.region;
  if (r.kind === "rect") {
    return {
      kind: "rect",
      points: [
        [parseNumber(r.v_lo), parseNumber(r.w_lo)],
        [parseNumber(r.v_hi), parseNumber(r.w_hi)],
      ],
      fill: leafColor(node),
      attrs: {
        "data-kind": "leaf",
        "data-method": node.method ?? "?",
        "data-outcome": node.outcome ?? "?",
      },
    };
  }
  if (r.kind === "triangle") {
    const x1 = parseNumber(r.x1), y1 = parseNumber(r.y1);
    const x3 = parseNumber(r.x3), y3 = parseNumber(r.y3);
    return {
      kind: "polygon",
      points: [
        [x1, y1],
        [x1, y3],
        [x3, y1],
      ],
      fill: leafColor(node),
      attrs: {
        "data-kind": "leaf",
        "data-method": node.method ?? "?",
        "data-outcome": node.outcome ?? "?",
      },
    };
  }
  return null;
}

export function pointInLeaf(node: CertNode, v: number, w: number): boolean {
  const r = node.region;
  if (r.kind === "rect") {
    return (
      v >= parseNumber(r.v_lo) && v <= parseNumber(r.v_hi) &&
      w >= parseNumber(r.w_lo) && w <= parseNumber(r.w_hi)
    );
  }
  if (r.kind === "triangle") {
    const x1 = parseNumber(r.x1), y1 = parseNumber(r.y1);
    const x3 = parseNumber(r.x3), y3 = parseNumber(r.y3);
    // legs at (x1, y1); hypotenuse from (x1, y3) to (x3, y1)
    return (
      v >= x1 && w >= y1 &&
      (v - x1) / (x3 - x1) + (w - y1) / (y3 - y1) <= 1 + 1e-12
    );
  }
  return false;
}

export function certificateShapes(cert: Certificate, raster = 96): Shape[] {
  if (!cert.tree || !cert.space) {
    throw new CertificateSchemaError("certificate missing space/tree");
  }
  const shapes: Shape[] = [];
  const leafList = [...leaves(cert.tree)];
  if (cert.space === "s3") {
    for (const node of leafList) {
      const s = regionShape(node);
      if (s) shapes.push(s);
    }
    // pentagon overlay: color every uncovered 10%-domain cell by the
    // reduction step that handles it
    const step = 1 / raster;
    for (let i = 0; i < raster; i++) {
      for (let j = 0; j < raster; j++) {
        const v = (i + 0.5) * step;
        const w = (j + 0.5) * step;
        const kind = reductionStep(v, w);
        if (kind === "outside" || kind === "s3_computer") continue;
        if (leafList.some((n) => pointInLeaf(n, v, w))) continue;
        shapes.push({
          kind: "rect",
          points: [
            [i * step, j * step],
            [(i + 1) * step, (j + 1) * step],
          ],
          fill: STEP_FILL[kind],
          attrs: { "data-kind": "coverage", "data-step": kind },
        });
      }
    }
    return shapes;
  }
  if (cert.space === "h3") {
    for (const node of leafList) {
      if (node.method !== "sweep_band") continue;
      const rw = parseNumber(node.region.rect_w);
      const rh = parseNumber(node.region.rect_h);
      for (const row of node.children ?? []) {
        const w = parseNumber(row.w);
        const v0 = parseNumber(row.v_start);
        const boxes = row.boxes as number;
        shapes.push({
          kind: "rect",
          points: [
            [v0 - rw / 2, w - rh / 2],
            [v0 + (boxes - 0.5) * rw, w + rh / 2],
          ],
          fill: row.outcome === "proved" ? "#87b7e8" : "#d62728",
          attrs: { "data-kind": "sweep-row", "data-outcome": row.outcome ?? "?" },
        });
      }
    }
    return shapes;
  }
  throw new CertificateSchemaError(`unknown space ${cert.space}`);
}

export function renderCertificate(certText: string, raster = 96): string {
  let cert: Certificate;
  try {
    cert = JSON.parse(certText);
  } catch (e) {
    throw new CertificateSchemaError(`not JSON: ${e}`);
  }
  const shapes = certificateShapes(cert, raster);
  let frame: Frame;
  let labels;
  if (cert.space === "s3") {
    frame = makeFrame(0, 1, 0, 1);
    labels = { xLabel: "v / |S3|", yLabel: "w / |S3|", title: "certified coverage (S3)" };
  } else {
    const xs = shapes.flatMap((s) => s.points.map((p) => p[0]));
    const ys = shapes.flatMap((s) => s.points.map((p) => p[1]));
    frame = makeFrame(Math.min(...xs), Math.max(...xs), Math.min(...ys), Math.max(...ys));
    labels = { xLabel: "v", yLabel: "w", title: "certified sweep rows (H3)" };
  }
  return renderSvg(frame, shapes, labels);
}
