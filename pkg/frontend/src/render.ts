/**
 * Rasterize a campaign histogram into a fixed-axis PNG heatmap.
 *
 * Axes never auto-scale: x (squared concurrence) spans [0, 1] and
 * y (mean reduced roughness squared) spans [0, 55/108], so figures from
 * different campaigns are directly comparable. Empty bins stay white;
 * nonzero bins are shaded by count, log-scaled by default.
 */

import { PNG } from "pngjs";
import { Colormap, getColormap, Rgb } from "./colormap.js";
import { Histogram } from "./histogram.js";
import { drawText, GLYPH_HEIGHT, textWidth } from "./font.js";

export const X_MAX = 1.0;
export const Y_MAX = 55 / 108;

export interface RenderOptions {
  cmap?: string;
  logScale?: boolean;
  xLabel?: string;
  yLabel?: string;
  plotWidth?: number;
  plotHeight?: number;
}

export const MARGIN_LEFT = 46;
export const MARGIN_RIGHT = 12;
export const MARGIN_TOP = 18;
export const MARGIN_BOTTOM = 34;
const DEFAULT_PLOT_WIDTH = 600;
const DEFAULT_PLOT_HEIGHT = 440;
const TICK_LENGTH = 4;

const X_TICKS = [0, 0.25, 0.5, 0.75, 1];
const Y_TICKS = [0, 0.1, 0.2, 0.3, 0.4, 0.5];

function setPixel(png: PNG, x: number, y: number, [r, g, b]: Rgb): void {
  if (x < 0 || y < 0 || x >= png.width || y >= png.height) return;
  const i = (y * png.width + x) * 4;
  png.data[i] = r;
  png.data[i + 1] = g;
  png.data[i + 2] = b;
  png.data[i + 3] = 255;
}

function fillRect(png: PNG, x0: number, y0: number, x1: number, y1: number, rgb: Rgb): void {
  for (let y = y0; y < y1; y++) {
    for (let x = x0; x < x1; x++) {
      setPixel(png, x, y, rgb);
    }
  }
}

function formatTick(v: number): string {
  return Number.isInteger(v) ? String(v) : String(v);
}

export function renderHistogram(hist: Histogram, options: RenderOptions = {}): PNG {
  const cmap: Colormap = getColormap(options.cmap ?? "gray");
  const logScale = options.logScale ?? true;
  const xLabel = options.xLabel ?? "C^2";
  const yLabel = options.yLabel ?? "R+^2";
  const plotW = options.plotWidth ?? DEFAULT_PLOT_WIDTH;
  const plotH = options.plotHeight ?? DEFAULT_PLOT_HEIGHT;

  const width = MARGIN_LEFT + plotW + MARGIN_RIGHT;
  const height = MARGIN_TOP + plotH + MARGIN_BOTTOM;
  const png = new PNG({ width, height });
  fillRect(png, 0, 0, width, height, [255, 255, 255]);

  const left = MARGIN_LEFT;
  const top = MARGIN_TOP;
  const black: Rgb = [0, 0, 0];

  const xToPx = (x: number) => left + (x / X_MAX) * plotW;
  const yToPx = (y: number) => top + plotH - (y / Y_MAX) * plotH;

  const scale = (count: number): number => {
    if (hist.maxCount <= 0) return 0;
    return logScale
      ? Math.log1p(count) / Math.log1p(hist.maxCount)
      : count / hist.maxCount;
  };

  for (const bin of hist.bins) {
    if (bin.count <= 0) continue;
    let px0 = Math.floor(xToPx(bin.xLo));
    let px1 = Math.ceil(xToPx(bin.xHi));
    let py0 = Math.floor(yToPx(bin.yHi));
    let py1 = Math.ceil(yToPx(bin.yLo));
    px0 = Math.max(px0, left);
    py0 = Math.max(py0, top);
    px1 = Math.min(Math.max(px1, px0 + 1), left + plotW);
    py1 = Math.min(Math.max(py1, py0 + 1), top + plotH);
    fillRect(png, px0, py0, px1, py1, cmap(scale(bin.count)));
  }

  // frame
  for (let x = left - 1; x <= left + plotW; x++) {
    setPixel(png, x, top - 1, black);
    setPixel(png, x, top + plotH, black);
  }
  for (let y = top - 1; y <= top + plotH; y++) {
    setPixel(png, left - 1, y, black);
    setPixel(png, left + plotW, y, black);
  }

  // ticks and tick labels
  const text = (s: string, x: number, y: number) =>
    drawText(s, Math.round(x), Math.round(y), (px, py) => setPixel(png, px, py, black));

  for (const t of X_TICKS) {
    const px = Math.round(xToPx(t));
    for (let k = 1; k <= TICK_LENGTH; k++) setPixel(png, px, top + plotH + k, black);
    const label = formatTick(t);
    text(label, px - textWidth(label) / 2, top + plotH + TICK_LENGTH + 3);
  }
  for (const t of Y_TICKS) {
    const py = Math.round(yToPx(t));
    for (let k = 2; k <= TICK_LENGTH + 1; k++) setPixel(png, left - k, py, black);
    const label = formatTick(t);
    text(label, left - TICK_LENGTH - 3 - textWidth(label), py - GLYPH_HEIGHT / 2);
  }

  // axis labels: x label centered below the ticks, y label above the axis
  text(
    xLabel,
    left + plotW / 2 - textWidth(xLabel) / 2,
    top + plotH + TICK_LENGTH + 3 + GLYPH_HEIGHT + 5,
  );
  text(yLabel, 2, top - 1 - GLYPH_HEIGHT - 3);

  return png;
}

export function renderToPngBuffer(hist: Histogram, options: RenderOptions = {}): Buffer {
  return PNG.sync.write(renderHistogram(hist, options));
}
