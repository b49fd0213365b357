export { BoundTable } from "./table.js";
export type { Cell, TableRow } from "./table.js";
export {
  analyze,
  computeCharacteristics,
} from "./bindings.js";
export type {
  AnalysisResult,
  AnalyzeOptions,
  ComputeOptions,
  InputRecord,
  OutcomeInput,
} from "./bindings.js";
export { CliError, defaultCommand } from "./runner.js";
export { parseCsv } from "./csv.js";
