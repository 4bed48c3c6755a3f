/**
 * Positivity heatmap: one cell per grid point, colored by the magnitude of
 * F where F > 0 and masked (hatched grey) where F <= 0 or missing.
 *
 * Every cell carries data-v / data-w / data-mask attributes so the rendered
 * split can be checked against the CSV cell-for-cell.
 */

import { GridFile, parseGrid } from "./gridfile.js";
import { Frame, Shape, makeFrame, renderSvg } from "./svg.js";

const MASK_FILL = "#d0d0d0";

function positiveFill(f: number, fMax: number): string {
  // single-hue ramp, light to saturated blue
  const t = Math.min(1, Math.max(0, fMax > 0 ? f / fMax : 0));
  const light = Math.round(235 - 150 * t);
  return `rgb(${light - 60},${light},255)`;
}

function cellEdges(centers: number[]): number[] {
  const edges: number[] = [];
  for (let i = 0; i <= centers.length; i++) {
    if (i === 0) {
      edges.push(centers[0] - (centers[1] - centers[0]) / 2);
    } else if (i === centers.length) {
      edges.push(centers[i - 1] + (centers[i - 1] - centers[i - 2]) / 2);
    } else {
      edges.push((centers[i - 1] + centers[i]) / 2);
    }
  }
  return edges;
}

export function positivityShapes(grid: GridFile): Shape[] {
  const vEdges = cellEdges(grid.vs);
  const wEdges = cellEdges(grid.ws);
  let fMax = 0;
  for (const row of grid.cells) {
    for (const f of row) {
      if (f !== null && f > fMax) fMax = f;
    }
  }
  const shapes: Shape[] = [];
  for (let i = 0; i < grid.vs.length; i++) {
    for (let j = 0; j < grid.ws.length; j++) {
      const f = grid.cells[i][j];
      const masked = f === null || f <= 0;
      shapes.push({
        kind: "rect",
        points: [
          [vEdges[i], wEdges[j]],
          [vEdges[i + 1], wEdges[j + 1]],
        ],
        fill: masked ? MASK_FILL : positiveFill(f!, fMax),
        attrs: {
          "data-v": String(grid.vs[i]),
          "data-w": String(grid.ws[j]),
          "data-mask": masked ? "1" : "0",
        },
      });
    }
  }
  return shapes;
}

export function renderPositivity(csvText: string, title?: string): string {
  const grid = parseGrid(csvText);
  const vEdges = cellEdges(grid.vs);
  const wEdges = cellEdges(grid.ws);
  const frame: Frame = makeFrame(
    vEdges[0], vEdges[vEdges.length - 1], wEdges[0], wEdges[wEdges.length - 1],
  );
  return renderSvg(frame, positivityShapes(grid), {
    xLabel: "v",
    yLabel: "w",
    title: title ?? "Hutchings function positivity",
  });
}
