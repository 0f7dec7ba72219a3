#!/usr/bin/env node
/**
 * CLI: `plot --input histogram.csv --output fig.png [--linear] [--cmap NAME]`
 *
 * Exit codes: 0 success, 1 failure (malformed CSV, unknown colormap, I/O),
 * 2 usage error.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { pathToFileURL } from "node:url";
import { parseArgs } from "node:util";
import { COLORMAP_NAMES } from "./colormap.js";
import { CsvError, parseHistogramCsv } from "./histogram.js";
import { renderToPngBuffer } from "./render.js";

const USAGE = `usage: qrough-plot plot --input histogram.csv --output fig.png [--linear] [--cmap NAME]

Render a campaign histogram CSV as a fixed-axis PNG heatmap
(x in [0, 1], y in [0, 55/108]; log-count shading unless --linear).
Colormaps: ${COLORMAP_NAMES.join(", ")}.`;

export function main(argv: string[]): number {
  if (argv[0] !== "plot") {
    process.stderr.write(USAGE + "\n");
    return 2;
  }

  let values;
  try {
    ({ values } = parseArgs({
      args: argv.slice(1),
      options: {
        input: { type: "string" },
        output: { type: "string" },
        linear: { type: "boolean", default: false },
        cmap: { type: "string", default: "gray" },
      },
    }));
  } catch (err) {
    process.stderr.write(`${(err as Error).message}\n${USAGE}\n`);
    return 2;
  }
  if (!values.input || !values.output) {
    process.stderr.write(`--input and --output are required\n${USAGE}\n`);
    return 2;
  }

  try {
    const hist = parseHistogramCsv(readFileSync(values.input, "utf8"));
    if (hist.totalCount === 0) {
      process.stderr.write("warning: histogram has zero total count; rendering a blank canvas\n");
    }
    writeFileSync(
      values.output,
      renderToPngBuffer(hist, { cmap: values.cmap, logScale: !values.linear }),
    );
  } catch (err) {
    if (err instanceof CsvError) {
      process.stderr.write(`error: malformed histogram CSV at ${err.message}\n`);
    } else {
      process.stderr.write(`error: ${(err as Error).message}\n`);
    }
    return 1;
  }
  return 0;
}

if (process.argv[1] && import.meta.url === pathToFileURL(process.argv[1]).href) {
  process.exit(main(process.argv.slice(2)));
}
