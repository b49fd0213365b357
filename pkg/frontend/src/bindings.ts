/** The two bound operations: compute characteristics and analyze outcomes.
 *
 * Both delegate to the textchar CLI through temp workspaces; no metric or
 * statistics logic lives on this side, so the bindings cannot diverge from
 * the primary implementation.
 */

import { mkdir, readFile, writeFile } from "node:fs/promises";
import { join } from "node:path";

import { BoundTable } from "./table.js";
import { CliError, defaultCommand, runCli, tomlValue, withWorkspace } from "./runner.js";

export interface InputRecord {
  id: string;
  fragments: Record<string, string>;
}

export interface ComputeOptions {
  /** CLI invocation, e.g. ["python3", "-m", "textchar.cli"]. */
  command?: string[];
  workers?: number;
  /** Metric keys; omitted = the full default registry. */
  selection?: string[];
  keepWorkspace?: boolean;
}

export interface OutcomeInput {
  name: string;
  values: Record<string, number>;
}

export interface AnalyzeOptions {
  command?: string[];
  analyses?: string[];
  outcome?: string;
  bucketSize?: number;
  seed?: number;
  splitFraction?: number;
  l2Strength?: number;
  impute?: "none" | "mean";
  features?: string[];
  keepWorkspace?: boolean;
}

export interface AnalysisResult {
  /** Parsed report.json. */
  report: Record<string, unknown>;
  /** Exact report.json bytes, for byte-equality with CLI runs. */
  reportText: string;
  /** CLI stdout summary lines. */
  summary: string;
}

function fragmentNames(records: InputRecord[]): string[] {
  const names = new Set<string>();
  for (const record of records) {
    for (const name of Object.keys(record.fragments)) {
      if (name === "id") {
        throw new Error('"id" is reserved and cannot be a fragment name');
      }
      names.add(name);
    }
  }
  if (names.size === 0) {
    throw new Error("records carry no fragments");
  }
  return [...names].sort();
}

/** Compute the characteristics table for in-memory records. */
export async function computeCharacteristics(
  records: InputRecord[],
  options: ComputeOptions = {},
): Promise<BoundTable> {
  const command = options.command ?? defaultCommand();
  const names = records.length > 0 ? fragmentNames(records) : ["text"];
  return withWorkspace(options.keepWorkspace ?? false, async (dir) => {
    const datasetPath = join(dir, "dataset.jsonl");
    const lines = records.map((record) =>
      JSON.stringify({ id: record.id, ...record.fragments }),
    );
    await writeFile(datasetPath, lines.length ? lines.join("\n") + "\n" : "", "utf-8");

    const config: string[] = [
      "[dataset]",
      `path = ${tomlValue("dataset.jsonl")}`,
      `format = "jsonl"`,
      `id_field = "id"`,
      "",
    ];
    for (const name of names) {
      config.push("[[fragment]]");
      config.push(`name = ${tomlValue(name)}`);
      config.push(`source_fields = ${tomlValue([name])}`);
      config.push("");
    }
    if (options.selection) {
      config.push("[metrics]");
      config.push(`selection = ${tomlValue(options.selection)}`);
      config.push("");
    }
    config.push("[output]");
    config.push(`dir = ${tomlValue("out")}`);
    config.push(`workers = ${tomlValue(options.workers ?? 1)}`);
    await writeFile(join(dir, "config.toml"), config.join("\n") + "\n", "utf-8");

    const result = await runCli(command, [
      "compute",
      "--config",
      join(dir, "config.toml"),
    ]);
    if (result.code !== 0) {
      throw new CliError("textchar compute failed", result);
    }
    const csvText = await readFile(join(dir, "out", "characteristics.csv"), "utf-8");
    return BoundTable.fromCsv(csvText);
  });
}

/** Run the analysis phase on a computed table plus outcome values. */
export async function analyze(
  table: BoundTable,
  outcomes: OutcomeInput,
  options: AnalyzeOptions = {},
): Promise<AnalysisResult> {
  const command = options.command ?? defaultCommand();
  return withWorkspace(options.keepWorkspace ?? false, async (dir) => {
    await mkdir(join(dir, "out"), { recursive: true });
    await writeFile(join(dir, "characteristics.csv"), table.csvText, "utf-8");

    const ids = Object.keys(outcomes.values).sort();
    const outcomeLines = [`id,${outcomes.name}`];
    for (const id of ids) {
      outcomeLines.push(`${id},${outcomes.values[id]}`);
    }
    await writeFile(join(dir, "outcomes.csv"), outcomeLines.join("\n") + "\n", "utf-8");

    const analyses = options.analyses ?? [
      "distributions",
      "correlations",
      "buckets",
      "logistic",
    ];
    const config: string[] = [
      "[outcomes]",
      `path = ${tomlValue("outcomes.csv")}`,
      `names = ${tomlValue([outcomes.name])}`,
      "",
      "[analysis]",
      `run = ${tomlValue(analyses)}`,
      `outcome = ${tomlValue(options.outcome ?? outcomes.name)}`,
      `bucket_size = ${tomlValue(options.bucketSize ?? 100)}`,
      `seed = ${tomlValue(options.seed ?? 0)}`,
      `split_fraction = ${tomlValue(options.splitFraction ?? 0.8)}`,
      `l2_strength = ${tomlValue(options.l2Strength ?? 1.0)}`,
      `impute = ${tomlValue(options.impute ?? "none")}`,
    ];
    if (options.features) {
      config.push(`features = ${tomlValue(options.features)}`);
    }
    config.push("");
    config.push("[output]");
    config.push(`dir = ${tomlValue("out")}`);
    config.push(`characteristics_path = ${tomlValue("characteristics.csv")}`);
    await writeFile(join(dir, "config.toml"), config.join("\n") + "\n", "utf-8");

    const result = await runCli(command, [
      "analyze",
      "--config",
      join(dir, "config.toml"),
    ]);
    if (result.code !== 0) {
      throw new CliError("textchar analyze failed", result);
    }
    const reportText = await readFile(join(dir, "out", "report.json"), "utf-8");
    return {
      report: JSON.parse(reportText) as Record<string, unknown>,
      reportText,
      summary: result.stdout,
    };
  });
}
