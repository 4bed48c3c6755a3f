/**
 * Grid CSV parsing: header `v,w,F`, rows row-major (v outer, w inner),
 * empty F cells mark points where the forward solver degenerated.
 */

export interface GridCell {
  v: number;
  w: number;
  f: number | null;
}

export interface GridFile {
  vs: number[];
  ws: number[];
  /** cells[i][j] is the value at (vs[i], ws[j]); null where F was empty */
  cells: (number | null)[][];
}

export class GridParseError extends Error {
  constructor(message: string, public line: number) {
    super(`line ${line}: ${message}`);
  }
}

export function parseGrid(text: string): GridFile {
  const lines = text.split(/\r?\n/).filter((l) => l.length > 0);
  if (lines.length === 0 || lines[0].trim() !== "v,w,F") {
    throw new GridParseError("expected header 'v,w,F'", 1);
  }
  const cells: GridCell[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split(",");
    if (parts.length !== 3) {
      throw new GridParseError(`expected 3 fields, got ${parts.length}`, i + 1);
    }
    const v = Number(parts[0]);
    const w = Number(parts[1]);
    if (!Number.isFinite(v) || !Number.isFinite(w)) {
      throw new GridParseError("non-numeric coordinate", i + 1);
    }
    const f = parts[2] === "" ? null : Number(parts[2]);
    if (f !== null && !Number.isFinite(f)) {
      throw new GridParseError("non-numeric F value", i + 1);
    }
    cells.push({ v, w, f });
  }
  const vs = [...new Set(cells.map((c) => c.v))].sort((a, b) => a - b);
  const ws = [...new Set(cells.map((c) => c.w))].sort((a, b) => a - b);
  if (vs.length * ws.length !== cells.length) {
    throw new GridParseError(
      `grid is not rectangular: ${vs.length}x${ws.length} != ${cells.length}`,
      lines.length,
    );
  }
  const grid: (number | null)[][] = vs.map(() => ws.map(() => null));
  const vi = new Map(vs.map((v, i) => [v, i]));
  const wi = new Map(ws.map((w, i) => [w, i]));
  for (const c of cells) {
    grid[vi.get(c.v)!][wi.get(c.w)!] = c.f;
  }
  return { vs, ws, cells: grid };
}
