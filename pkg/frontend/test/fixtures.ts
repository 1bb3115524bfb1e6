import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

/** Golden fixtures shared with the pipeline's test suite. */
const DATA = join(dirname(fileURLToPath(import.meta.url)), "..", "..", "tests", "data");

export function goldenText(name: string): string {
  return readFileSync(join(DATA, name), "utf-8");
}
