#!/usr/bin/env node
/**
 * bubbleproof-plots positivity <grid.csv> <out.svg> [title]
 * bubbleproof-plots certificate <cert.json> <out.svg>
 */

import { readFileSync, writeFileSync } from "node:fs";
import { renderPositivity } from "./renderPositivity.js";
import { renderCertificate } from "./renderCertificate.js";

export function main(argv: string[]): number {
  const [cmd, input, output, title] = argv;
  if (!cmd || !input || !output) {
    console.error("usage: bubbleproof-plots {positivity|certificate} <in> <out.svg> [title]");
    return 2;
  }
  let svg: string;
  try {
    const text = readFileSync(input, "utf8");
    if (cmd === "positivity") {
      svg = renderPositivity(text, title);
    } else if (cmd === "certificate") {
      svg = renderCertificate(text);
    } else {
      console.error(`unknown command ${cmd}`);
      return 2;
    }
  } catch (e) {
    console.error(String(e));
    return 1;
  }
  writeFileSync(output, svg);
  console.error(`wrote ${output}`);
  return 0;
}

const isDirect = process.argv[1] && import.meta.url.endsWith(
  process.argv[1].split("/").pop() ?? "",
);
if (isDirect) {
  process.exit(main(process.argv.slice(2)));
}
