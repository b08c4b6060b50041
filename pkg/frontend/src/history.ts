// Redo bookkeeping.  The service owns the undo stack (the session history);
// the client only remembers which diagonals were undone so "redo" can replay
// them.  Any fresh rotation invalidates the remembered future.

import type { Diagonal } from './types'

export class RedoStack {
  private stack: Diagonal[] = []

  push(d: Diagonal): void {
    this.stack.push(d)
  }

  pop(): Diagonal | undefined {
    return this.stack.pop()
  }

  clear(): void {
    this.stack = []
  }

  get size(): number {
    return this.stack.length
  }
}
