/**
 * Minimal 5x7 bitmap font covering the glyphs the axis labels need.
 * Each glyph is 7 strings of 5 chars; '#' marks an opaque pixel.
 */

const GLYPHS: Record<string, string[]> = {
  "0": [" ### ", "#   #", "#  ##", "# # #", "##  #", "#   #", " ### "],
  "1": ["  #  ", " ##  ", "  #  ", "  #  ", "  #  ", "  #  ", " ### "],
  "2": [" ### ", "#   #", "    #", "   # ", "  #  ", " #   ", "#####"],
  "3": [" ### ", "#   #", "    #", "  ## ", "    #", "#   #", " ### "],
  "4": ["   # ", "  ## ", " # # ", "#  # ", "#####", "   # ", "   # "],
  "5": ["#####", "#    ", "#### ", "    #", "    #", "#   #", " ### "],
  "6": [" ### ", "#    ", "#    ", "#### ", "#   #", "#   #", " ### "],
  "7": ["#####", "    #", "   # ", "  #  ", "  #  ", "  #  ", "  #  "],
  "8": [" ### ", "#   #", "#   #", " ### ", "#   #", "#   #", " ### "],
  "9": [" ### ", "#   #", "#   #", " ####", "    #", "    #", " ### "],
  ".": ["     ", "     ", "     ", "     ", "     ", " ##  ", " ##  "],
  "+": ["     ", "  #  ", "  #  ", "#####", "  #  ", "  #  ", "     "],
  "^": ["  #  ", " # # ", "#   #", "     ", "     ", "     ", "     "],
  C: [" ### ", "#   #", "#    ", "#    ", "#    ", "#   #", " ### "],
  R: ["#### ", "#   #", "#   #", "#### ", "# #  ", "#  # ", "#   #"],
  " ": ["     ", "     ", "     ", "     ", "     ", "     ", "     "],
};

export const GLYPH_WIDTH = 5;
export const GLYPH_HEIGHT = 7;
const ADVANCE = GLYPH_WIDTH + 1;

export function textWidth(text: string): number {
  return text.length * ADVANCE - 1;
}

/**
 * Calls plot(x, y) for every opaque pixel of `text` anchored at (x0, y0)
 * (top-left corner). Unknown characters render as blanks.
 */
export function drawText(
  text: string,
  x0: number,
  y0: number,
  plot: (x: number, y: number) => void,
): void {
  for (let i = 0; i < text.length; i++) {
    const glyph = GLYPHS[text[i]] ?? GLYPHS[" "];
    for (let r = 0; r < GLYPH_HEIGHT; r++) {
      for (let c = 0; c < GLYPH_WIDTH; c++) {
        if (glyph[r][c] === "#") {
          plot(x0 + i * ADVANCE + c, y0 + r);
        }
      }
    }
  }
}
