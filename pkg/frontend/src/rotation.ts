// Client-side prediction of where a clicked diagonal lands, used for the
// hover ghost so no request is made until the user commits.  The service's
// answer is still authoritative; the explorer checks the two agree.

import type { Diagonal } from './types'
import { sameDiagonal } from './types'

function next(size: number, v: number): number {
  return (v % size) + 1
}

// Vertices strictly between a and b, walking clockwise from a.
function arcBetween(size: number, a: number, b: number): number[] {
  const out: number[] = []
  for (let v = next(size, a); v !== b; v = next(size, v)) out.push(v)
  return out
}

// The cell incident to d on the side bounded by the clockwise path a..b:
// the path's vertices minus those cut off by a diagonal nested in the path.
function cellSide(size: number, diagonals: Diagonal[], d: Diagonal, a: number, b: number): number[] {
  const pos = (v: number) => (v - a + size) % size
  const limit = pos(b)
  const covered = new Set<number>()
  for (const other of diagonals) {
    if (sameDiagonal(other, d)) continue
    if (pos(other[0]) > limit || pos(other[1]) > limit) continue
    const [first, second] = pos(other[0]) < pos(other[1]) ? other : [other[1], other[0]]
    for (const v of arcBetween(size, first, second)) covered.add(v)
  }
  const cell = [a]
  for (const v of arcBetween(size, a, b)) {
    if (!covered.has(v)) cell.push(v)
  }
  cell.push(b)
  return cell
}

// Corner vertices of the two cells glued along d, ascending.
export function unionPolygon(size: number, diagonals: Diagonal[], d: Diagonal): number[] {
  const [a, b] = d
  const seen = new Set([...cellSide(size, diagonals, d, a, b), ...cellSide(size, diagonals, d, b, a)])
  return [...seen].sort((x, y) => x - y)
}

export function rotatedImage(size: number, m: number, diagonals: Diagonal[], d: Diagonal): Diagonal {
  const u = unionPolygon(size, diagonals, d)
  const span = u.length
  const i = u.indexOf(d[0])
  const low = u[(i - 1 + span) % span]!
  const high = u[(i + m) % span]!
  return low < high ? [low, high] : [high, low]
}
