/**
 * The word-map document contract (schema version 1).
 *
 * A map is one JSON object `{meta, points}`; `set` is "a", "b", or
 * "both", a point's count in the other source is zero exactly when the
 * word is unique to one source, words are unique, coordinates finite.
 * Validation failures name the JSON path of the first violation so the
 * UI can show it in the error banner.
 */

export type SetLabel = "a" | "b" | "both";

export interface MapMeta {
  schema_version: number;
  source_a_name: string;
  source_b_name: string;
  dim: number;
  perplexity: number;
  generated_at: string;
}

export interface MapPoint {
  word: string;
  x: number;
  y: number;
  set: SetLabel;
  count_a: number;
  count_b: number;
}

export interface WordMap {
  meta: MapMeta;
  points: MapPoint[];
}

export const SCHEMA_VERSION = 1;

export type ValidationResult =
  | { ok: true; map: WordMap }
  | { ok: false; path: string; message: string };

const SET_VALUES = new Set<string>(["a", "b", "both"]);
const META_KEYS = [
  "schema_version",
  "source_a_name",
  "source_b_name",
  "dim",
  "perplexity",
  "generated_at",
] as const;
const POINT_KEYS = ["word", "x", "y", "set", "count_a", "count_b"] as const;

function fail(path: string, message: string): ValidationResult {
  return { ok: false, path, message };
}

function isObject(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

function isFiniteNumber(value: unknown): value is number {
  return typeof value === "number" && Number.isFinite(value);
}

function isCount(value: unknown): value is number {
  return typeof value === "number" && Number.isInteger(value) && value >= 0;
}

function hasExactKeys(value: Record<string, unknown>, keys: readonly string[]): boolean {
  const present = Object.keys(value);
  return present.length === keys.length && keys.every((k) => k in value);
}

/** Validate a parsed JSON document against the map schema. */
export function validateWordMap(doc: unknown): ValidationResult {
  if (!isObject(doc)) return fail("$", "top level must be an object");
  if (!hasExactKeys(doc, ["meta", "points"])) {
    return fail("$", 'expected exactly the keys "meta" and "points"');
  }
  const meta = doc.meta;
  if (!isObject(meta)) return fail("meta", "must be an object");
  // Version gate first, so future-format files fail with the right message.
  if (!("schema_version" in meta)) return fail("meta.schema_version", "missing");
  const version = meta.schema_version;
  if (version !== SCHEMA_VERSION) {
    return fail(
      "meta.schema_version",
      `unsupported version ${JSON.stringify(version)} (this viewer supports ${SCHEMA_VERSION})`,
    );
  }
  if (!hasExactKeys(meta, META_KEYS)) {
    return fail("meta", `expected exactly the keys ${META_KEYS.join(", ")}`);
  }
  if (typeof meta.source_a_name !== "string") return fail("meta.source_a_name", "must be a string");
  if (typeof meta.source_b_name !== "string") return fail("meta.source_b_name", "must be a string");
  if (!isCount(meta.dim) || meta.dim < 1) return fail("meta.dim", "must be a positive integer");
  if (!isFiniteNumber(meta.perplexity) || meta.perplexity <= 0) {
    return fail("meta.perplexity", "must be a finite positive number");
  }
  if (typeof meta.generated_at !== "string" || meta.generated_at === "") {
    return fail("meta.generated_at", "must be a non-empty string");
  }

  if (!Array.isArray(doc.points)) return fail("points", "must be an array");
  const seen = new Set<string>();
  const points: MapPoint[] = [];
  for (let i = 0; i < doc.points.length; i++) {
    const raw = doc.points[i];
    const path = `points[${i}]`;
    if (!isObject(raw)) return fail(path, "must be an object");
    if (!hasExactKeys(raw, POINT_KEYS)) {
      return fail(path, `expected exactly the keys ${POINT_KEYS.join(", ")}`);
    }
    if (typeof raw.word !== "string" || raw.word === "") {
      return fail(`${path}.word`, "must be a non-empty string");
    }
    if (seen.has(raw.word)) return fail(`${path}.word`, `duplicate word ${JSON.stringify(raw.word)}`);
    seen.add(raw.word);
    if (!isFiniteNumber(raw.x)) return fail(`${path}.x`, "must be a finite number");
    if (!isFiniteNumber(raw.y)) return fail(`${path}.y`, "must be a finite number");
    if (typeof raw.set !== "string" || !SET_VALUES.has(raw.set)) {
      return fail(`${path}.set`, 'must be one of "a", "b", "both"');
    }
    if (!isCount(raw.count_a)) return fail(`${path}.count_a`, "must be a non-negative integer");
    if (!isCount(raw.count_b)) return fail(`${path}.count_b`, "must be a non-negative integer");
    const set = raw.set as SetLabel;
    if (set === "a" && raw.count_b !== 0) return fail(`${path}.count_b`, 'must be 0 when set is "a"');
    if (set === "b" && raw.count_a !== 0) return fail(`${path}.count_a`, 'must be 0 when set is "b"');
    if (set === "both" && (raw.count_a < 1 || raw.count_b < 1)) {
      return fail(path, 'counts must be >= 1 when set is "both"');
    }
    points.push({
      word: raw.word,
      x: raw.x,
      y: raw.y,
      set,
      count_a: raw.count_a,
      count_b: raw.count_b,
    });
  }
  return {
    ok: true,
    map: {
      meta: {
        schema_version: version,
        source_a_name: meta.source_a_name,
        source_b_name: meta.source_b_name,
        dim: meta.dim,
        perplexity: meta.perplexity,
        generated_at: meta.generated_at,
      },
      points,
    },
  };
}

/** Parse bytes/text into a validated map. */
export function parseWordMap(text: string): ValidationResult {
  let doc: unknown;
  try {
    doc = JSON.parse(text);
  } catch (error) {
    return fail("$", `not valid JSON: ${(error as Error).message}`);
  }
  return validateWordMap(doc);
}
