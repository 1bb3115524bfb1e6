/**
 * DOM wiring: canvas rendering, pan/zoom gestures, legend toggles,
 * search, file loading.  All scene content comes from the pure helpers
 * in scene.ts; this file only pushes pixels and routes events.
 */

import { parseWordMap, type SetLabel, type WordMap } from "./schema.js";
import {
  boundsOf,
  centerOn,
  fitTransform,
  panBy,
  zoomAt,
  type Transform,
} from "./viewport.js";
import {
  buildScene,
  hitTest,
  initialViewState,
  makeViewerConfig,
  toggleSet,
  type Scene,
  type ViewState,
  type ViewerConfig,
} from "./scene.js";
import { searchPoints } from "./search.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

export class ViewerApp {
  private map: WordMap | null = null;
  private view: ViewState | null = null;
  private config: ViewerConfig | null = null;

  private readonly canvas = el<HTMLCanvasElement>("map-canvas");
  private readonly ctx = this.canvas.getContext("2d")!;
  private readonly banner = el<HTMLDivElement>("banner");
  private readonly legendBox = el<HTMLDivElement>("legend");
  private readonly searchInput = el<HTMLInputElement>("search");
  private readonly searchResults = el<HTMLUListElement>("search-results");
  private readonly badgeBox = el<HTMLDivElement>("badge");
  private readonly tooltip = el<HTMLDivElement>("tooltip");
  private readonly status = el<HTMLDivElement>("status");

  private dragging = false;
  private lastPointer: [number, number] = [0, 0];
  private moved = false;

  constructor() {
    this.wireEvents();
    this.resize();
    new ResizeObserver(() => this.resize()).observe(this.canvas.parentElement!);
  }

  /** Parse, validate, and (only if fully valid) swap in the new map. */
  loadFromText(text: string, name: string): void {
    const result = parseWordMap(text);
    if (!result.ok) {
      this.showBanner(`${name}: ${result.path}: ${result.message}`);
      return;
    }
    this.hideBanner();
    this.map = result.map;
    const bounds = boundsOf(result.map.points.map((p) => ({ x: p.x, y: -p.y })));
    const { width, height } = this.canvasSize();
    const transform: Transform = bounds
      ? fitTransform(bounds, width, height)
      : { scale: 1, tx: width / 2, ty: height / 2 };
    this.config = makeViewerConfig(transform.scale);
    this.view = initialViewState(transform);
    const meta = result.map.meta;
    this.status.textContent =
      `${name} — ${result.map.points.length} words` +
      (meta.source_b_name ? ` (${meta.source_a_name} vs ${meta.source_b_name})` : "");
    this.searchInput.value = "";
    this.renderSearchResults([]);
    this.render();
  }

  async loadFromUrl(url: string): Promise<void> {
    try {
      const response = await fetch(url);
      if (!response.ok) throw new Error(`HTTP ${response.status}`);
      this.loadFromText(await response.text(), url);
    } catch (error) {
      this.showBanner(`cannot load ${url}: ${(error as Error).message}`);
    }
  }

  private showBanner(message: string): void {
    this.banner.textContent = message;
    this.banner.hidden = false;
    // No partial render: a failed load never replaces a good scene.
  }

  private hideBanner(): void {
    this.banner.hidden = true;
  }

  private canvasSize(): { width: number; height: number } {
    return { width: this.canvas.clientWidth, height: this.canvas.clientHeight };
  }

  private resize(): void {
    const parent = this.canvas.parentElement!;
    const ratio = window.devicePixelRatio || 1;
    this.canvas.width = parent.clientWidth * ratio;
    this.canvas.height = parent.clientHeight * ratio;
    this.canvas.style.width = `${parent.clientWidth}px`;
    this.canvas.style.height = `${parent.clientHeight}px`;
    this.ctx.setTransform(ratio, 0, 0, ratio, 0, 0);
    this.render();
  }

  private render(): void {
    const { width, height } = this.canvasSize();
    this.ctx.clearRect(0, 0, width, height);
    if (!this.map || !this.view || !this.config) return;
    const scene = buildScene(this.map, this.view, width, height, this.config);
    this.drawScene(scene);
    this.renderLegend(scene);
    this.badgeBox.hidden = scene.badge === null;
    this.badgeBox.textContent = scene.badge ?? "";
  }

  private drawScene(scene: Scene): void {
    const ctx = this.ctx;
    for (const circle of scene.circles) {
      ctx.beginPath();
      ctx.arc(circle.sx, circle.sy, circle.radius, 0, Math.PI * 2);
      ctx.fillStyle = circle.color;
      ctx.globalAlpha = circle.revealed ? 0.55 : 0.85;
      ctx.fill();
      if (circle.highlighted) {
        ctx.globalAlpha = 1;
        ctx.lineWidth = 2;
        ctx.strokeStyle = "#111";
        ctx.stroke();
      }
    }
    ctx.globalAlpha = 1;
    ctx.font = "11px system-ui, sans-serif";
    ctx.textAlign = "center";
    ctx.fillStyle = "#333";
    for (const label of scene.labels) {
      ctx.fillText(label.word, label.sx, label.sy);
    }
  }

  private renderLegend(scene: Scene): void {
    this.legendBox.replaceChildren(
      ...scene.legend.map((entry) => {
        const item = document.createElement("label");
        item.className = "legend-entry";
        const box = document.createElement("input");
        box.type = "checkbox";
        box.checked = entry.visible;
        box.addEventListener("change", () => this.onToggle(entry.set));
        const swatch = document.createElement("span");
        swatch.className = "swatch";
        swatch.style.background = entry.color;
        const text = document.createElement("span");
        text.textContent = `${entry.name} (${entry.count})`;
        item.append(box, swatch, text);
        return item;
      }),
    );
  }

  private onToggle(label: SetLabel): void {
    if (!this.view) return;
    this.view = toggleSet(this.view, label);
    this.render();
  }

  private renderSearchResults(hits: ReturnType<typeof searchPoints>): void {
    this.searchResults.replaceChildren(
      ...hits.map((hit) => {
        const item = document.createElement("li");
        item.textContent = hit.word;
        item.addEventListener("click", () => this.select(hit.word));
        return item;
      }),
    );
    this.searchResults.hidden = hits.length === 0;
  }

  /** Center the viewport on a word and highlight it. */
  private select(word: string): void {
    if (!this.map || !this.view) return;
    const point = this.map.points.find((p) => p.word === word);
    if (!point) return;
    const { width, height } = this.canvasSize();
    this.view = {
      ...this.view,
      selected: word,
      transform: centerOn(point.x, -point.y, this.view.transform.scale, width, height),
    };
    this.render();
  }

  private wireEvents(): void {
    el<HTMLInputElement>("file-input").addEventListener("change", (event) => {
      const file = (event.target as HTMLInputElement).files?.[0];
      if (!file) return;
      file.text().then((text) => this.loadFromText(text, file.name));
    });

    this.searchInput.addEventListener("input", () => {
      if (!this.map || !this.view) return;
      const query = this.searchInput.value;
      this.view = { ...this.view, query };
      this.renderSearchResults(searchPoints(this.map, query));
    });

    this.canvas.addEventListener("pointerdown", (event) => {
      this.dragging = true;
      this.moved = false;
      this.lastPointer = [event.offsetX, event.offsetY];
      this.canvas.setPointerCapture(event.pointerId);
    });
    this.canvas.addEventListener("pointermove", (event) => {
      if (this.dragging && this.view) {
        const dx = event.offsetX - this.lastPointer[0];
        const dy = event.offsetY - this.lastPointer[1];
        if (Math.abs(dx) + Math.abs(dy) > 1) this.moved = true;
        this.lastPointer = [event.offsetX, event.offsetY];
        this.view = { ...this.view, transform: panBy(this.view.transform, dx, dy) };
        this.render();
      } else {
        this.updateTooltip(event.offsetX, event.offsetY);
      }
    });
    this.canvas.addEventListener("pointerup", (event) => {
      this.dragging = false;
      if (!this.moved) this.onClick(event.offsetX, event.offsetY);
    });
    this.canvas.addEventListener("wheel", (event) => {
      if (!this.view || !this.config) return;
      event.preventDefault();
      const factor = Math.exp(-event.deltaY * 0.0015);
      this.view = {
        ...this.view,
        transform: zoomAt(this.view.transform, factor, event.offsetX, event.offsetY, {
          minScale: this.config.minScale,
          maxScale: this.config.maxScale,
        }),
      };
      this.render();
    });
  }

  private currentScene(): Scene | null {
    if (!this.map || !this.view || !this.config) return null;
    const { width, height } = this.canvasSize();
    return buildScene(this.map, this.view, width, height, this.config);
  }

  private onClick(sx: number, sy: number): void {
    const scene = this.currentScene();
    if (!scene || !this.view) return;
    const hit = hitTest(scene, sx, sy);
    this.view = { ...this.view, selected: hit ? hit.word : null };
    this.render();
  }

  private updateTooltip(sx: number, sy: number): void {
    const scene = this.currentScene();
    const hit = scene ? hitTest(scene, sx, sy) : null;
    if (!hit || !this.map) {
      this.tooltip.hidden = true;
      if (this.view && this.view.hovered !== null) {
        this.view = { ...this.view, hovered: null };
        this.render();
      }
      return;
    }
    const point = this.map.points.find((p) => p.word === hit.word)!;
    this.tooltip.textContent = `${point.word} — A:${point.count_a} B:${point.count_b}`;
    this.tooltip.style.left = `${sx + 14}px`;
    this.tooltip.style.top = `${sy + 14}px`;
    this.tooltip.hidden = false;
    if (this.view && this.view.hovered !== hit.word) {
      this.view = { ...this.view, hovered: hit.word };
      this.render();
    }
  }
}

export function start(): void {
  const app = new ViewerApp();
  const params = new URLSearchParams(window.location.search);
  const mapUrl = params.get("map");
  if (mapUrl) void app.loadFromUrl(mapUrl);
  (window as unknown as { wordmapViewer: ViewerApp }).wordmapViewer = app;
}

start();
