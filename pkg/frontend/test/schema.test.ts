import { describe, expect, it } from "vitest";

import { parseWordMap, validateWordMap } from "../src/schema.js";
import { goldenText } from "./fixtures.js";

describe("parseWordMap", () => {
  it("accepts the golden three-point map", () => {
    const result = parseWordMap(goldenText("golden_three_point_map.json"));
    expect(result.ok).toBe(true);
    if (result.ok) {
      expect(result.map.points).toHaveLength(3);
      expect(result.map.meta.dim).toBe(300);
      expect(result.map.points.map((p) => p.word)).toEqual(["equator", "north", "south"]);
    }
  });

  it("accepts the golden empty map", () => {
    const result = parseWordMap(goldenText("golden_empty_map.json"));
    expect(result.ok).toBe(true);
    if (result.ok) expect(result.map.points).toHaveLength(0);
  });

  it("rejects non-JSON with the root path", () => {
    const result = parseWordMap("definitely not json");
    expect(result).toMatchObject({ ok: false, path: "$" });
  });

  it("gates on schema_version before anything else", () => {
    const doc = JSON.parse(goldenText("golden_three_point_map.json"));
    doc.meta.schema_version = 2;
    doc.meta.extra_future_field = true;
    const result = validateWordMap(doc);
    expect(result).toMatchObject({ ok: false, path: "meta.schema_version" });
    if (!result.ok) expect(result.message).toContain("unsupported version 2");
  });

  it.each([
    [(d: any) => void (d.points[0].x = "wide"), "points[0].x"],
    [(d: any) => void (d.points[1].set = "c"), "points[1].set"],
    [(d: any) => void (d.points[2].count_a = -1), "points[2].count_a"],
    [(d: any) => void (d.points[2].count_a = 1.5), "points[2].count_a"],
    [(d: any) => void (d.points[1].word = ""), "points[1].word"],
    [(d: any) => void delete d.points[0].y, "points[0]"],
    [(d: any) => void (d.meta.dim = 0), "meta.dim"],
    [(d: any) => void (d.meta.generated_at = ""), "meta.generated_at"],
    [(d: any) => void (d.extra = 1), "$"],
  ])("names the JSON path of the first violation (%#)", (mutate, path) => {
    const doc = JSON.parse(goldenText("golden_three_point_map.json"));
    mutate(doc);
    expect(validateWordMap(doc)).toMatchObject({ ok: false, path });
  });

  it("rejects label/count inconsistencies", () => {
    const doc = JSON.parse(goldenText("golden_three_point_map.json"));
    doc.points[1].count_b = 5; // set "a" point must have count_b == 0
    const result = validateWordMap(doc);
    expect(result).toMatchObject({ ok: false, path: "points[1].count_b" });
  });

  it("rejects duplicate words", () => {
    const doc = JSON.parse(goldenText("golden_three_point_map.json"));
    doc.points[1].word = doc.points[0].word;
    expect(validateWordMap(doc)).toMatchObject({ ok: false, path: "points[1].word" });
  });

  it("rejects non-finite coordinates encoded as strings or nulls", () => {
    const doc = JSON.parse(goldenText("golden_three_point_map.json"));
    doc.points[0].y = null;
    expect(validateWordMap(doc)).toMatchObject({ ok: false, path: "points[0].y" });
  });
});
