/**
 * Case-insensitive prefix search over the map vocabulary.
 */

import type { MapPoint, WordMap } from "./schema.js";

/** Points whose word starts with the query, sorted by word; empty query
 * matches nothing. */
export function searchPoints(map: WordMap, query: string, limit = 50): MapPoint[] {
  if (query === "") return [];
  const needle = query.toLowerCase();
  return map.points
    .filter((p) => p.word.toLowerCase().startsWith(needle))
    .sort((x, y) => (x.word < y.word ? -1 : x.word > y.word ? 1 : 0))
    .slice(0, limit);
}
