/**
 * Pretty-printing of the canonical Laurent text format
 * ("c * v^e * ... + ..."), with truncation beyond MAX_TERMS terms.
 */

export const MAX_TERMS = 12;

export interface Term {
  coefficient: string;
  factors: { variable: string; exponent: number }[];
}

export function parseTerms(text: string): Term[] {
  if (text.trim() === '0') return [];
  return text.split(' + ').map((chunk) => {
    const parts = chunk.split(' * ');
    const factors = parts.slice(1).map((f) => {
      const [variable, exp] = f.split('^');
      return { variable, exponent: exp === undefined ? 1 : parseInt(exp, 10) };
    });
    return { coefficient: parts[0], factors };
  });
}

function renderTerm(t: Term): string {
  const pieces: string[] = [];
  if (t.coefficient !== '1' || t.factors.length === 0) {
    pieces.push(t.coefficient);
  }
  for (const f of t.factors) {
    pieces.push(f.exponent === 1 ? f.variable : `${f.variable}^${f.exponent}`);
  }
  return pieces.join('·');
}

export interface Formatted {
  display: string;
  truncated: boolean;
  termCount: number;
}

/** Human form of a canonical Laurent string, truncated past the term cap. */
export function formatLaurent(text: string, expanded = false): Formatted {
  const terms = parseTerms(text);
  if (terms.length === 0) {
    return { display: '0', truncated: false, termCount: 0 };
  }
  const truncated = !expanded && terms.length > MAX_TERMS;
  const shown = truncated ? terms.slice(0, MAX_TERMS) : terms;
  let display = shown.map(renderTerm).join(' + ');
  if (truncated) {
    display += ` + … (${terms.length - MAX_TERMS} more)`;
  }
  return { display, truncated, termCount: terms.length };
}

/**
 * Round-trip check: re-serialize parsed terms into the canonical format.
 * The UI never edits variables, so every displayed string must survive this.
 */
export function toCanonical(terms: Term[]): string {
  if (terms.length === 0) return '0';
  return terms
    .map((t) =>
      [t.coefficient, ...t.factors.map((f) => `${f.variable}^${f.exponent}`)].join(' * '),
    )
    .join(' + ');
}
