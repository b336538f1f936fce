import assert from "node:assert/strict";
import { test } from "node:test";

import { Clock, Debouncer } from "../src/slider.js";

class FakeClock implements Clock {
  time = 0;
  private timers: { at: number; fn: () => void; id: number }[] = [];
  private nextId = 1;

  now(): number {
    return this.time;
  }

  setTimeout(fn: () => void, ms: number): unknown {
    const id = this.nextId++;
    this.timers.push({ at: this.time + ms, fn, id });
    return id;
  }

  clearTimeout(handle: unknown): void {
    this.timers = this.timers.filter((t) => t.id !== handle);
  }

  advance(ms: number): void {
    const target = this.time + ms;
    while (true) {
      const due = this.timers
        .filter((t) => t.at <= target)
        .sort((a, b) => a.at - b.at)[0];
      if (!due) {
        break;
      }
      this.timers = this.timers.filter((t) => t.id !== due.id);
      this.time = due.at;
      due.fn();
    }
    this.time = target;
  }
}

test("the leading call fires immediately", () => {
  const clock = new FakeClock();
  const debouncer = new Debouncer(200, clock);
  let runs = 0;
  debouncer.schedule(() => { runs += 1; });
  assert.equal(runs, 1);
});

test("a burst coalesces into one trailing call with the last payload", () => {
  const clock = new FakeClock();
  const debouncer = new Debouncer(200, clock);
  const seen: number[] = [];
  for (let i = 0; i < 10; i += 1) {
    debouncer.schedule(() => seen.push(i));
    clock.advance(10);
  }
  assert.deepEqual(seen, [0]);
  clock.advance(200);
  assert.deepEqual(seen, [0, 9]);
});

test("steady slow calls all pass through", () => {
  const clock = new FakeClock();
  const debouncer = new Debouncer(200, clock);
  let runs = 0;
  for (let i = 0; i < 5; i += 1) {
    debouncer.schedule(() => { runs += 1; });
    clock.advance(250);
  }
  assert.equal(runs, 5);
});

test("rate stays at or below one call per interval while dragging", () => {
  const clock = new FakeClock();
  const debouncer = new Debouncer(200, clock);
  let runs = 0;
  for (let i = 0; i < 100; i += 1) {
    debouncer.schedule(() => { runs += 1; });
    clock.advance(16); // ~60 slider events per second
  }
  clock.advance(400);
  const elapsedSeconds = clock.time / 1000;
  assert.ok(runs <= elapsedSeconds * 5 + 1, `${runs} calls in ${elapsedSeconds}s`);
  assert.ok(runs >= 2, "trailing updates must still arrive");
});

test("cancel drops the pending trailing call", () => {
  const clock = new FakeClock();
  const debouncer = new Debouncer(200, clock);
  let runs = 0;
  debouncer.schedule(() => { runs += 1; });
  debouncer.schedule(() => { runs += 1; });
  debouncer.cancel();
  clock.advance(1000);
  assert.equal(runs, 1);
});
