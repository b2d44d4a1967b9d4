import { spawnSync } from "node:child_process";
import { mkdtempSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

/** Raised when the CLI rejects an input; carries the CLI's own message. */
export class FermifockError extends Error {}

function command(): { cmd: string; baseArgs: string[] } {
  const override = process.env.FERMIFOCK_CMD;
  if (override) {
    const parts = override.split(/\s+/).filter((p) => p.length > 0);
    return { cmd: parts[0] ?? "fermifock", baseArgs: parts.slice(1) };
  }
  return { cmd: "fermifock", baseArgs: [] };
}

/** Run one fermifock subcommand and return its stdout. */
export function runCli(args: string[]): string {
  const { cmd, baseArgs } = command();
  const result = spawnSync(cmd, [...baseArgs, ...args], {
    encoding: "utf-8",
    maxBuffer: 256 * 1024 * 1024,
  });
  if (result.error) {
    throw new FermifockError(`failed to launch ${cmd}: ${result.error.message}`);
  }
  if (result.status !== 0) {
    const message = (result.stderr || result.stdout || "").trim();
    throw new FermifockError(message || `${cmd} exited with status ${result.status}`);
  }
  return result.stdout;
}

/** Run a subcommand with JSON payloads written to temp files first. */
export function runCliWithFiles(
  files: Record<string, unknown>,
  argsFor: (paths: Record<string, string>) => string[],
): string {
  const dir = mkdtempSync(join(tmpdir(), "fermifock-"));
  try {
    const paths: Record<string, string> = {};
    for (const [name, payload] of Object.entries(files)) {
      const path = join(dir, name);
      writeFileSync(path, JSON.stringify(payload));
      paths[name] = path;
    }
    return runCli(argsFor(paths));
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}
