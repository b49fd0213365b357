/** Spawning and workspace plumbing for the textchar CLI. */

import { spawn } from "node:child_process";
import { mkdtemp, rm } from "node:fs/promises";
import { tmpdir } from "node:os";
import { join } from "node:path";

/** How to invoke the CLI; override via options or TEXTCHAR_CMD. */
export function defaultCommand(): string[] {
  const env = process.env.TEXTCHAR_CMD;
  if (env && env.trim().length > 0) {
    return env.trim().split(/\s+/);
  }
  return ["textchar"];
}

export interface RunResult {
  code: number;
  stdout: string;
  stderr: string;
}

export async function runCli(
  command: string[],
  args: string[],
  cwd?: string,
): Promise<RunResult> {
  const [program, ...prefix] = command;
  return new Promise((resolve, reject) => {
    const child = spawn(program, [...prefix, ...args], {
      cwd,
      stdio: ["ignore", "pipe", "pipe"],
    });
    let stdout = "";
    let stderr = "";
    child.stdout.on("data", (chunk) => (stdout += chunk));
    child.stderr.on("data", (chunk) => (stderr += chunk));
    child.on("error", reject);
    child.on("close", (code) => resolve({ code: code ?? 1, stdout, stderr }));
  });
}

export class CliError extends Error {
  constructor(
    message: string,
    public readonly result: RunResult,
  ) {
    super(`${message}\n${result.stderr.trim()}`);
    this.name = "CliError";
  }
}

export async function withWorkspace<T>(
  keep: boolean,
  body: (dir: string) => Promise<T>,
): Promise<T> {
  const dir = await mkdtemp(join(tmpdir(), "textchar-bindings-"));
  try {
    return await body(dir);
  } finally {
    if (!keep) {
      await rm(dir, { recursive: true, force: true });
    }
  }
}

/** Serialize a value as a TOML literal (strings via JSON escaping). */
export function tomlValue(value: string | number | boolean | string[]): string {
  if (Array.isArray(value)) {
    return `[${value.map((v) => JSON.stringify(v)).join(", ")}]`;
  }
  if (typeof value === "string") {
    return JSON.stringify(value);
  }
  return String(value);
}
