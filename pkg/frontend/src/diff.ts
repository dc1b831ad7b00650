export interface DiffSpan {
  kind: "same" | "removed" | "added";
  text: string;
}

function tokens(text: string): string[] {
  return text.split(/\s+/).filter((t) => t.length > 0);
}

// Word-level diff via longest common subsequence. Case texts are short
// enough that the quadratic table is fine.
export function wordDiff(a: string, b: string): DiffSpan[] {
  const wa = tokens(a);
  const wb = tokens(b);
  const lcs: number[][] = Array.from({ length: wa.length + 1 }, () =>
    new Array<number>(wb.length + 1).fill(0),
  );
  for (let i = wa.length - 1; i >= 0; i--) {
    for (let j = wb.length - 1; j >= 0; j--) {
      lcs[i][j] =
        wa[i] === wb[j]
          ? lcs[i + 1][j + 1] + 1
          : Math.max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }

  const spans: DiffSpan[] = [];
  const push = (kind: DiffSpan["kind"], word: string) => {
    const last = spans[spans.length - 1];
    if (last && last.kind === kind) last.text += ` ${word}`;
    else spans.push({ kind, text: word });
  };

  let i = 0;
  let j = 0;
  while (i < wa.length && j < wb.length) {
    if (wa[i] === wb[j]) {
      push("same", wa[i]);
      i++;
      j++;
    } else if (lcs[i + 1][j] >= lcs[i][j + 1]) {
      push("removed", wa[i]);
      i++;
    } else {
      push("added", wb[j]);
      j++;
    }
  }
  for (; i < wa.length; i++) push("removed", wa[i]);
  for (; j < wb.length; j++) push("added", wb[j]);
  return spans;
}
