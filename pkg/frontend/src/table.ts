/** BoundTable: a thin dataframe-style view over a characteristics CSV.
 *
 * Holds the CLI's CSV bytes verbatim, so serializing a table produced
 * through the bindings is byte-equal to a direct CLI run on the same
 * inputs.  Cells may be null (missing), mirroring empty CSV cells.
 */

import { parseCsv } from "./csv.js";

export type Cell = number | null;

export interface TableRow {
  id: string;
  fragment: string;
  values: Record<string, Cell>;
}

export class BoundTable {
  private constructor(
    public readonly csvText: string,
    public readonly columns: string[],
    public readonly rows: Array<{ id: string; fragment: string }>,
    private readonly cells: Cell[][],
  ) {}

  static fromCsv(csvText: string): BoundTable {
    const parsed = parseCsv(csvText);
    if (parsed.length === 0) {
      throw new Error("characteristics CSV is empty");
    }
    const header = parsed[0];
    if (header[0] !== "id" || header[1] !== "fragment") {
      throw new Error("characteristics CSV must start with id,fragment columns");
    }
    const columns = header.slice(2);
    const rows: Array<{ id: string; fragment: string }> = [];
    const cells: Cell[][] = [];
    for (const record of parsed.slice(1)) {
      if (record.length === 1 && record[0] === "") {
        continue;
      }
      if (record.length !== header.length) {
        throw new Error(`CSV row has ${record.length} fields, expected ${header.length}`);
      }
      rows.push({ id: record[0], fragment: record[1] });
      cells.push(record.slice(2).map((cell) => (cell === "" ? null : Number(cell))));
    }
    return new BoundTable(csvText, columns, rows, cells);
  }

  get length(): number {
    return this.rows.length;
  }

  fragmentNames(): string[] {
    return [...new Set(this.rows.map((r) => r.fragment))].sort();
  }

  recordIds(): string[] {
    const seen = new Set<string>();
    const out: string[] = [];
    for (const row of this.rows) {
      if (!seen.has(row.id)) {
        seen.add(row.id);
        out.push(row.id);
      }
    }
    return out;
  }

  /** One metric column, optionally restricted to one fragment name. */
  column(metric: string, fragment?: string): Cell[] {
    const idx = this.columns.indexOf(metric);
    if (idx < 0) {
      throw new Error(`unknown metric column ${JSON.stringify(metric)}`);
    }
    const out: Cell[] = [];
    this.rows.forEach((row, i) => {
      if (fragment === undefined || row.fragment === fragment) {
        out.push(this.cells[i][idx]);
      }
    });
    return out;
  }

  cell(id: string, fragment: string, metric: string): Cell {
    const idx = this.columns.indexOf(metric);
    if (idx < 0) {
      throw new Error(`unknown metric column ${JSON.stringify(metric)}`);
    }
    for (let i = 0; i < this.rows.length; i += 1) {
      if (this.rows[i].id === id && this.rows[i].fragment === fragment) {
        return this.cells[i][idx];
      }
    }
    throw new Error(`no row for (${id}, ${fragment})`);
  }

  /** Array-of-objects view, the host environment's tabular convention. */
  toRecords(): TableRow[] {
    return this.rows.map((row, i) => {
      const values: Record<string, Cell> = {};
      this.columns.forEach((name, j) => {
        values[name] = this.cells[i][j];
      });
      return { id: row.id, fragment: row.fragment, values };
    });
  }

  /** Columnar view: metric name -> cells in row order. */
  toColumns(): Record<string, Cell[]> {
    const out: Record<string, Cell[]> = {};
    this.columns.forEach((name, j) => {
      out[name] = this.cells.map((row) => row[j]);
    });
    return out;
  }
}
