/**
 * Pure scene construction: (map, view state) -> drawable scene graph.
 *
 * Everything the canvas and overlay render is derived here with no DOM
 * access and no hidden state, so the same map and view state always
 * produce the same scene.
 */

import type { MapPoint, SetLabel, WordMap } from "./schema.js";
import { type Transform, worldToScreen } from "./viewport.js";

/** Colour-blind-safe palette (Okabe-Ito); also documented in the README. */
export const SET_COLORS: Record<SetLabel, string> = {
  a: "#0072b2", // blue
  b: "#e69f00", // orange
  both: "#009e73", // green
};

export const SET_ORDER: SetLabel[] = ["a", "b", "both"];

export interface ViewState {
  transform: Transform;
  visible: Record<SetLabel, boolean>;
  hovered: string | null;
  selected: string | null;
  query: string;
}

export interface ViewerConfig {
  minScale: number;
  maxScale: number;
  /** Labels appear when the zoom scale exceeds this... */
  labelZoomScale: number;
  /** ...or when fewer than this many points are in view. */
  labelMaxPoints: number;
  baseRadius: number;
  radiusScale: number;
}

/** Limits and thresholds relative to the map's fitted scale. */
export function makeViewerConfig(fitScale: number): ViewerConfig {
  return {
    minScale: fitScale * 0.05,
    maxScale: fitScale * 500,
    labelZoomScale: fitScale * 3,
    labelMaxPoints: 120,
    baseRadius: 2.5,
    radiusScale: 1.6,
  };
}

export function initialViewState(transform: Transform): ViewState {
  return {
    transform,
    visible: { a: true, b: true, both: true },
    hovered: null,
    selected: null,
    query: "",
  };
}

/** Hide or show one set; an immediate double toggle is the identity. */
export function toggleSet(view: ViewState, label: SetLabel): ViewState {
  return { ...view, visible: { ...view.visible, [label]: !view.visible[label] } };
}

export interface SceneCircle {
  word: string;
  set: SetLabel;
  sx: number;
  sy: number;
  radius: number;
  color: string;
  highlighted: boolean;
  /** True when the point belongs to a hidden set but is shown anyway
   * because it is the current selection. */
  revealed: boolean;
}

export interface SceneLabel {
  word: string;
  sx: number;
  sy: number;
}

export interface LegendEntry {
  set: SetLabel;
  name: string;
  color: string;
  /** Count of points with this label in the file (never affected by
   * visibility). */
  count: number;
  visible: boolean;
}

export interface Scene {
  circles: SceneCircle[];
  labels: SceneLabel[];
  legend: LegendEntry[];
  /** Non-null when the selected point's set is hidden. */
  badge: string | null;
}

export function markerRadius(point: MapPoint, config: ViewerConfig): number {
  return config.baseRadius + config.radiusScale * Math.log1p(point.count_a + point.count_b);
}

function legendName(map: WordMap, set: SetLabel): string {
  if (set === "a") return map.meta.source_a_name || "source A";
  if (set === "b") return map.meta.source_b_name || "source B";
  return "both";
}

/** Build the drawable scene for one frame. */
export function buildScene(
  map: WordMap,
  view: ViewState,
  width: number,
  height: number,
  config: ViewerConfig,
): Scene {
  const circles: SceneCircle[] = [];
  let badge: string | null = null;
  for (const point of map.points) {
    const hidden = !view.visible[point.set];
    const isSelected = view.selected === point.word;
    if (hidden && !isSelected) continue;
    // World y points up; screen y points down.
    const [sx, sy] = worldToScreen(view.transform, point.x, -point.y);
    circles.push({
      word: point.word,
      set: point.set,
      sx,
      sy,
      radius: markerRadius(point, config),
      color: SET_COLORS[point.set],
      highlighted: isSelected || view.hovered === point.word,
      revealed: hidden && isSelected,
    });
    if (hidden && isSelected) badge = "hidden set";
  }

  const inView = circles.filter(
    (c) => c.sx >= 0 && c.sx <= width && c.sy >= 0 && c.sy <= height,
  );
  const showLabels =
    view.transform.scale > config.labelZoomScale || inView.length < config.labelMaxPoints;
  const labels: SceneLabel[] = showLabels
    ? inView.map((c) => ({ word: c.word, sx: c.sx, sy: c.sy - c.radius - 3 }))
    : [];

  const counts: Record<SetLabel, number> = { a: 0, b: 0, both: 0 };
  for (const point of map.points) counts[point.set] += 1;
  const legend: LegendEntry[] = SET_ORDER.map((set) => ({
    set,
    name: legendName(map, set),
    color: SET_COLORS[set],
    count: counts[set],
    visible: view.visible[set],
  }));

  return { circles, labels, legend, badge };
}

/** The circle under a screen position, topmost (last drawn) first. */
export function hitTest(scene: Scene, sx: number, sy: number, slack = 2): SceneCircle | null {
  for (let i = scene.circles.length - 1; i >= 0; i--) {
    const c = scene.circles[i];
    const dx = c.sx - sx;
    const dy = c.sy - sy;
    if (dx * dx + dy * dy <= (c.radius + slack) * (c.radius + slack)) return c;
  }
  return null;
}
