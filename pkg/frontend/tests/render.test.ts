import { readFileSync } from "node:fs";
import { join } from "node:path";
import { PNG } from "pngjs";
import { describe, expect, it } from "vitest";
import { getColormap } from "../src/colormap.js";
import { HEADER, parseHistogramCsv } from "../src/histogram.js";
import {
  MARGIN_LEFT,
  MARGIN_TOP,
  renderHistogram,
  renderToPngBuffer,
  X_MAX,
  Y_MAX,
} from "../src/render.js";

const FIXTURES = join(__dirname, "fixtures");
const PLOT_W = 600;
const PLOT_H = 440;

function loadFixture(name: string) {
  return parseHistogramCsv(readFileSync(join(FIXTURES, name), "utf8"));
}

function pixelAt(png: PNG, dataX: number, dataY: number): [number, number, number] {
  const px = Math.min(
    MARGIN_LEFT + PLOT_W - 1,
    Math.round(MARGIN_LEFT + (dataX / X_MAX) * PLOT_W),
  );
  const py = Math.max(
    MARGIN_TOP,
    Math.round(MARGIN_TOP + PLOT_H - (dataY / Y_MAX) * PLOT_H),
  );
  const i = (py * png.width + px) * 4;
  return [png.data[i], png.data[i + 1], png.data[i + 2]];
}

function luminance([r, g, b]: [number, number, number]): number {
  return (r + g + b) / 3;
}

describe("colormaps", () => {
  it("gray runs light to black", () => {
    const gray = getColormap("gray");
    expect(gray(0)).toEqual([220, 220, 220]);
    expect(gray(1)).toEqual([0, 0, 0]);
  });

  it("inferno endpoints differ from gray", () => {
    const inferno = getColormap("inferno");
    expect(inferno(0)).toEqual([0, 0, 80]);
    expect(inferno(1)[0]).toBeGreaterThan(200);
  });

  it("unknown name throws", () => {
    expect(() => getColormap("jet")).toThrow(/unknown colormap/);
  });
});

describe("renderHistogram", () => {
  it("pure fixture shows the blade with a tip near (1, 31/432)", () => {
    const png = renderHistogram(loadFixture("pure_20k.csv"));
    expect(png.width).toBe(MARGIN_LEFT + PLOT_W + 12);

    // tip region: shaded pixels exist near x = 1, y = 31/432
    const tipY = 31 / 432;
    let tipShaded = false;
    for (let dx = 0; dx < 0.02; dx += 0.004) {
      for (let dy = -0.01; dy <= 0.01; dy += 0.002) {
        if (luminance(pixelAt(png, 1 - dx, tipY + dy)) < 250) tipShaded = true;
      }
    }
    expect(tipShaded).toBe(true);

    // outside the blade envelope everything is white
    expect(pixelAt(png, 0.9, 0.45)).toEqual([255, 255, 255]);
    expect(pixelAt(png, 0.5, 0.02)).toEqual([255, 255, 255]);

    // interior of the blade is shaded
    expect(luminance(pixelAt(png, 0.3, 0.2))).toBeLessThan(250);
  });

  it("rank-2 fixture concentrates in the lower-left quadrant", () => {
    const png = renderHistogram(loadFixture("rank2_20k.csv"));
    let darkest = 255;
    let darkestX = -1;
    let darkestY = -1;
    for (let y = MARGIN_TOP; y < MARGIN_TOP + PLOT_H; y++) {
      for (let x = MARGIN_LEFT; x < MARGIN_LEFT + PLOT_W; x++) {
        const i = (y * png.width + x) * 4;
        const lum = (png.data[i] + png.data[i + 1] + png.data[i + 2]) / 3;
        if (lum < darkest) {
          darkest = lum;
          darkestX = x;
          darkestY = y;
        }
      }
    }
    expect(darkest).toBeLessThan(128);
    expect(darkestX - MARGIN_LEFT).toBeLessThan(PLOT_W / 4);
    expect(darkestY - MARGIN_TOP).toBeGreaterThan((3 * PLOT_H) / 4);
  });

  it("log shading lifts single-count bins above linear shading", () => {
    const hist = loadFixture("pure_20k.csv");
    const logPng = renderHistogram(hist, { logScale: true });
    const linPng = renderHistogram(hist, { logScale: false });
    const single = hist.bins.find((b) => b.count === 1)!;
    const cx = (single.xLo + single.xHi) / 2;
    const cy = (single.yLo + single.yHi) / 2;
    expect(luminance(pixelAt(logPng, cx, cy))).toBeLessThan(
      luminance(pixelAt(linPng, cx, cy)),
    );
  });

  it("zero-total histogram renders a blank plot area", () => {
    const png = renderHistogram(parseHistogramCsv(HEADER + "\n"));
    for (let y = MARGIN_TOP; y < MARGIN_TOP + PLOT_H; y += 7) {
      for (let x = MARGIN_LEFT; x < MARGIN_LEFT + PLOT_W; x += 7) {
        const i = (y * png.width + x) * 4;
        expect(png.data[i]).toBe(255);
      }
    }
  });

  it("is a pure function of the input", () => {
    const hist = loadFixture("rank2_20k.csv");
    const a = renderToPngBuffer(hist, { cmap: "inferno" });
    const b = renderToPngBuffer(hist, { cmap: "inferno" });
    expect(a.equals(b)).toBe(true);
  });
});
