/**
 * Colormaps: map a normalized intensity t in [0, 1] to RGB.
 * t = 0 is the lightest shade a nonzero bin can take; empty bins are drawn
 * white by the renderer and never pass through a colormap.
 */

export type Rgb = [number, number, number];
export type Colormap = (t: number) => Rgb;

function clamp01(t: number): number {
  return t < 0 ? 0 : t > 1 ? 1 : t;
}

/** Light gray down to black, like the print figures. */
function gray(t: number): Rgb {
  const v = Math.round(220 * (1 - clamp01(t)));
  return [v, v, v];
}

/** Dark-blue / magenta / yellow ramp (piecewise-linear inferno-like). */
function inferno(t: number): Rgb {
  const stops: Rgb[] = [
    [0, 0, 80],
    [120, 28, 109],
    [237, 105, 37],
    [252, 255, 164],
  ];
  const x = clamp01(t) * (stops.length - 1);
  const i = Math.min(Math.floor(x), stops.length - 2);
  const f = x - i;
  return [0, 1, 2].map((c) =>
    Math.round(stops[i][c] * (1 - f) + stops[i + 1][c] * f),
  ) as Rgb;
}

const COLORMAPS: Record<string, Colormap> = { gray, inferno };

export function getColormap(name: string): Colormap {
  const cmap = COLORMAPS[name];
  if (!cmap) {
    throw new Error(
      `unknown colormap ${JSON.stringify(name)}; available: ${Object.keys(COLORMAPS).join(", ")}`,
    );
  }
  return cmap;
}

export const COLORMAP_NAMES = Object.keys(COLORMAPS);
