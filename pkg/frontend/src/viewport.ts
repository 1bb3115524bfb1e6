/**
 * World <-> screen transform: uniform scale plus translation.
 *
 * screen = world * scale + translate.  The transform is always
 * invertible (scale is clamped to a positive range), zooming is anchored
 * so the world point under the cursor stays put, and the y axis is
 * flipped at scene-build time (not here) so maps read like a chart.
 */

export interface Transform {
  scale: number;
  tx: number;
  ty: number;
}

export interface ZoomLimits {
  minScale: number;
  maxScale: number;
}

export function worldToScreen(t: Transform, x: number, y: number): [number, number] {
  return [x * t.scale + t.tx, y * t.scale + t.ty];
}

export function screenToWorld(t: Transform, sx: number, sy: number): [number, number] {
  return [(sx - t.tx) / t.scale, (sy - t.ty) / t.scale];
}

export function panBy(t: Transform, dx: number, dy: number): Transform {
  return { scale: t.scale, tx: t.tx + dx, ty: t.ty + dy };
}

/**
 * Scale by `factor` keeping the world point under screen (cx, cy) fixed.
 * The resulting scale is clamped to the limits; at a limit the anchor
 * property still holds for the clamped factor.
 */
export function zoomAt(
  t: Transform,
  factor: number,
  cx: number,
  cy: number,
  limits: ZoomLimits,
): Transform {
  const scale = Math.min(limits.maxScale, Math.max(limits.minScale, t.scale * factor));
  const [wx, wy] = screenToWorld(t, cx, cy);
  return { scale, tx: cx - wx * scale, ty: cy - wy * scale };
}

export interface Bounds {
  minX: number;
  maxX: number;
  minY: number;
  maxY: number;
}

export function boundsOf(points: Iterable<{ x: number; y: number }>): Bounds | null {
  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (const p of points) {
    if (p.x < minX) minX = p.x;
    if (p.x > maxX) maxX = p.x;
    if (p.y < minY) minY = p.y;
    if (p.y > maxY) maxY = p.y;
  }
  if (minX === Infinity) return null;
  return { minX, maxX, minY, maxY };
}

/**
 * A transform that fits the bounds into width x height with a margin
 * fraction on each side.  Degenerate bounds (a single point) get an
 * arbitrary but finite scale.
 */
export function fitTransform(
  bounds: Bounds,
  width: number,
  height: number,
  margin = 0.08,
): Transform {
  const spanX = bounds.maxX - bounds.minX;
  const spanY = bounds.maxY - bounds.minY;
  const usableW = width * (1 - 2 * margin);
  const usableH = height * (1 - 2 * margin);
  const scale =
    spanX === 0 && spanY === 0
      ? 1
      : Math.min(usableW / (spanX || usableW), usableH / (spanY || usableH));
  const cx = (bounds.minX + bounds.maxX) / 2;
  const cy = (bounds.minY + bounds.maxY) / 2;
  return { scale, tx: width / 2 - cx * scale, ty: height / 2 - cy * scale };
}

/** A transform centered on (wx, wy) at the given scale. */
export function centerOn(
  wx: number,
  wy: number,
  scale: number,
  width: number,
  height: number,
): Transform {
  return { scale, tx: width / 2 - wx * scale, ty: height / 2 - wy * scale };
}
