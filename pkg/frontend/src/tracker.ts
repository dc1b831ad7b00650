// Monotonic sequence numbers for in-flight requests. A response is only
// applied if its request is still the newest one issued; anything older
// is stale and must be dropped, whatever order the network returns them.
export class RequestTracker {
  private latest = 0;

  next(): number {
    return ++this.latest;
  }

  isCurrent(seq: number): boolean {
    return seq === this.latest;
  }
}
