/** Minimal deterministic SVG assembly (string-built, no DOM). */

export interface Shape {
  kind: "rect" | "polygon";
  points: [number, number][]; // data coordinates; rect = [ll, ur]
  fill: string;
  attrs?: Record<string, string>;
}

export interface Frame {
  xMin: number;
  xMax: number;
  yMin: number;
  yMax: number;
  width: number;
  height: number;
  margin: number;
}

const esc = (s: string) =>
  s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;").replace(/"/g, "&quot;");

export function makeFrame(
  xMin: number, xMax: number, yMin: number, yMax: number,
  width = 720, height = 720, margin = 48,
): Frame {
  return { xMin, xMax, yMin, yMax, width, height, margin };
}

export function toPixel(f: Frame, x: number, y: number): [number, number] {
  const px = f.margin + ((x - f.xMin) / (f.xMax - f.xMin)) * (f.width - 2 * f.margin);
  const py = f.height - f.margin - ((y - f.yMin) / (f.yMax - f.yMin)) * (f.height - 2 * f.margin);
  return [px, py];
}

function shapeToSvg(f: Frame, s: Shape): string {
  const attrs = Object.entries(s.attrs ?? {})
    .map(([k, v]) => ` ${k}="${esc(v)}"`)
    .join("");
  if (s.kind === "rect") {
    const [ll, ur] = s.points;
    const [x0, y0] = toPixel(f, ll[0], ur[1]);
    const [x1, y1] = toPixel(f, ur[0], ll[1]);
    return `<rect x="${x0.toFixed(3)}" y="${y0.toFixed(3)}" width="${(x1 - x0).toFixed(3)}" height="${(y1 - y0).toFixed(3)}" fill="${esc(s.fill)}"${attrs}/>`;
  }
  const pts = s.points
    .map(([x, y]) => toPixel(f, x, y).map((p) => p.toFixed(3)).join(","))
    .join(" ");
  return `<polygon points="${pts}" fill="${esc(s.fill)}"${attrs}/>`;
}

export function renderSvg(
  f: Frame, shapes: Shape[],
  labels: { xLabel: string; yLabel: string; title?: string },
): string {
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${f.width}" height="${f.height}" viewBox="0 0 ${f.width} ${f.height}">`,
  );
  parts.push(`<rect width="${f.width}" height="${f.height}" fill="white"/>`);
  for (const s of shapes) {
    parts.push(shapeToSvg(f, s));
  }
  const [ox, oy] = toPixel(f, f.xMin, f.yMin);
  const [cx, cy] = toPixel(f, f.xMax, f.yMax);
  parts.push(
    `<rect x="${cx < ox ? cx : ox}" y="${cy}" width="${Math.abs(cx - ox)}" height="${Math.abs(oy - cy)}" fill="none" stroke="black" stroke-width="1"/>`,
  );
  if (labels.title) {
    parts.push(
      `<text x="${f.width / 2}" y="${f.margin / 2}" text-anchor="middle" font-size="16">${esc(labels.title)}</text>`,
    );
  }
  parts.push(
    `<text x="${f.width / 2}" y="${f.height - 8}" text-anchor="middle" font-size="14">${esc(labels.xLabel)}</text>`,
  );
  parts.push(
    `<text x="14" y="${f.height / 2}" text-anchor="middle" font-size="14" transform="rotate(-90 14 ${f.height / 2})">${esc(labels.yLabel)}</text>`,
  );
  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
