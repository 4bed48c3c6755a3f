import { readFileSync } from "node:fs";
import { join, dirname } from "node:path";
import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { parseGrid, GridParseError } from "../src/gridfile.js";
import { positivityShapes, renderPositivity } from "../src/renderPositivity.js";
import {
  certificateShapes,
  parseNumber,
  pointInLeaf,
  reductionStep,
  renderCertificate,
} from "../src/renderCertificate.js";

const FIX = join(dirname(fileURLToPath(import.meta.url)), "fixtures");
const read = (name: string) => readFileSync(join(FIX, name), "utf8");

describe("grid parsing", () => {
  it("parses the H3 grid", () => {
    const g = parseGrid(read("h3-grid.csv"));
    expect(g.vs.length).toBe(21);
    expect(g.ws.length).toBe(21);
  });

  it("allows empty F cells (S3 grid beyond the simplex)", () => {
    const g = parseGrid(read("s3-grid.csv"));
    const flat = g.cells.flat();
    expect(flat.some((f) => f === null)).toBe(true);
    expect(flat.some((f) => f !== null)).toBe(true);
  });

  it("rejects malformed input with a line number", () => {
    expect(() => parseGrid("v,w\n1,2\n")).toThrow(GridParseError);
    try {
      parseGrid("v,w,F\n1,2,3,4\n");
    } catch (e) {
      expect((e as GridParseError).message).toContain("line 2");
    }
  });
});

describe("positivity rendering", () => {
  it("masks exactly the non-positive and empty cells, cell-for-cell", () => {
    const text = read("h3-grid.csv");
    const grid = parseGrid(text);
    const shapes = positivityShapes(grid);
    expect(shapes.length).toBe(21 * 21);
    for (const s of shapes) {
      const v = Number(s.attrs!["data-v"]);
      const w = Number(s.attrs!["data-w"]);
      const i = grid.vs.indexOf(v);
      const j = grid.ws.indexOf(w);
      const f = grid.cells[i][j];
      const expectMask = f === null || f <= 0;
      expect(s.attrs!["data-mask"]).toBe(expectMask ? "1" : "0");
    }
  });

  it("positive region hugs the diagonal on the default H3 grid", () => {
    const grid = parseGrid(read("h3-grid.csv"));
    const n = grid.vs.length;
    for (let i = 0; i < n; i++) {
      const f = grid.cells[i][i];
      expect(f !== null && f > 0).toBe(true);
    }
    // far off-diagonal (v << w) the function is negative
    expect(grid.cells[0][n - 1]! < 0).toBe(true);
  });

  it("renders a deterministic SVG and masks an all-negative grid fully", () => {
    const text = read("h3-grid.csv");
    expect(renderPositivity(text)).toBe(renderPositivity(text));
    const synthetic =
      "v,w,F\n1,1,-0.5\n1,2,-0.1\n2,1,\n2,2,-2\n";
    const svg = renderPositivity(synthetic);
    expect((svg.match(/data-mask="1"/g) ?? []).length).toBe(4);
    expect(svg).not.toContain('data-mask="0"');
  });
});

describe("certificate rendering", () => {
  it("draws the S3 certificate as a region set covering the pentagon", () => {
    const cert = JSON.parse(read("s3-full-cert.json"));
    const shapes = certificateShapes(cert, 96);
    const leafShapes = shapes.filter((s) => s.attrs?.["data-kind"] === "leaf");
    expect(leafShapes.length).toBeGreaterThan(100);

    // union check at one-cell resolution: every pentagon cell center is
    // covered either by a certificate leaf or by a reduction overlay cell,
    // and nothing outside the pentagon is rastered
    const raster = 96;
    const step = 1 / raster;
    const covered = new Set(
      shapes
        .filter((s) => s.attrs?.["data-kind"] === "coverage")
        .map((s) => s.points[0].map((x) => Math.round(x / step)).join(",")),
    );
    const leaves: any[] = [];
    const walk = (n: any) => {
      if (!n.children || n.method === "sweep_band") leaves.push(n);
      else n.children.forEach(walk);
    };
    walk(cert.tree);
    let holes = 0;
    for (let i = 0; i < raster; i++) {
      for (let j = 0; j < raster; j++) {
        const v = (i + 0.5) * step;
        const w = (j + 0.5) * step;
        const inPentagon = reductionStep(v, w) !== "outside";
        const drawn =
          covered.has(`${i},${j}`) ||
          leaves.some((n) => pointInLeaf(n, v, w));
        if (inPentagon && !drawn) holes++;
      }
    }
    expect(holes).toBe(0);
    for (const s of shapes) {
      if (s.attrs?.["data-kind"] !== "coverage") continue;
      const cx = (s.points[0][0] + s.points[1][0]) / 2;
      const cy = (s.points[0][1] + s.points[1][1]) / 2;
      expect(reductionStep(cx, cy)).not.toBe("outside");
    }
  });

  it("renders H3 band certificates as one strip per row", () => {
    const cert = JSON.parse(read("h3-band-cert.json"));
    const shapes = certificateShapes(cert);
    expect(shapes.length).toBe(cert.rows);
    for (const s of shapes) {
      expect(s.attrs?.["data-outcome"]).toBe("proved");
    }
  });

  it("highlights failed rows", () => {
    const cert = JSON.parse(read("h3-band-cert.json"));
    cert.tree.children[0].outcome = "failed";
    const shapes = certificateShapes(cert);
    expect(shapes.some((s) => s.attrs?.["data-outcome"] === "failed")).toBe(true);
  });

  it("is idempotent and rejects schema mismatches", () => {
    const text = read("s3-full-cert.json");
    expect(renderCertificate(text, 48)).toBe(renderCertificate(text, 48));
    expect(() => renderCertificate("{}")).toThrow();
    expect(() => renderCertificate("not json")).toThrow();
  });

  it("parses exact rational coordinates", () => {
    expect(parseNumber("13/60")).toBeCloseTo(13 / 60, 15);
    expect(parseNumber("0.00274")).toBeCloseTo(0.00274, 15);
  });
});
