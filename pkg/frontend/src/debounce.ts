export const DEBOUNCE_MS = 350;

export interface Debounced {
  (): void;
  cancel(): void;
}

// Trailing-edge debounce: the wrapped function runs once, delayMs after
// the last call in a burst.
export function debounce(fn: () => void, delayMs: number): Debounced {
  let timer: ReturnType<typeof setTimeout> | null = null;
  const wrapped = () => {
    if (timer !== null) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = null;
      fn();
    }, delayMs);
  };
  wrapped.cancel = () => {
    if (timer !== null) clearTimeout(timer);
    timer = null;
  };
  return wrapped;
}
