/**
 * Rate limiter for the what-if slider: the leading call runs at once,
 * later calls inside the window coalesce into one trailing run, so the
 * service sees at most one request per interval while dragging.
 */

export interface Clock {
  now(): number;
  setTimeout(fn: () => void, ms: number): unknown;
  clearTimeout(handle: unknown): void;
}

const realClock: Clock = {
  now: () => Date.now(),
  setTimeout: (fn, ms) => setTimeout(fn, ms),
  clearTimeout: (handle) => clearTimeout(handle as Parameters<typeof clearTimeout>[0]),
};

export class Debouncer {
  private lastRun = -Infinity;
  private pending: (() => void) | null = null;
  private handle: unknown = null;

  constructor(
    private readonly intervalMs = 200,
    private readonly clock: Clock = realClock,
  ) {}

  schedule(fn: () => void): void {
    const now = this.clock.now();
    if (now - this.lastRun >= this.intervalMs && this.pending === null) {
      this.lastRun = now;
      fn();
      return;
    }
    this.pending = fn;
    if (this.handle === null) {
      const wait = Math.max(0, this.intervalMs - (now - this.lastRun));
      this.handle = this.clock.setTimeout(() => this.flush(), wait);
    }
  }

  private flush(): void {
    this.handle = null;
    const fn = this.pending;
    this.pending = null;
    if (fn) {
      this.lastRun = this.clock.now();
      fn();
    }
  }

  cancel(): void {
    if (this.handle !== null) {
      this.clock.clearTimeout(this.handle);
      this.handle = null;
    }
    this.pending = null;
  }
}
