// Polygon layout shared by both drawing panels.  Vertex 1 sits at the top
// and labels run clockwise, the same convention the service uses for its
// own SVG renders, so the two pictures line up.

import type { Diagonal } from './types'

export interface Point {
  x: number
  y: number
}

export const VIEWBOX = '-1.3 -1.3 2.6 2.6'

export function vertexPoint(size: number, v: number, radius = 1): Point {
  const angle = -Math.PI / 2 + (2 * Math.PI * (v - 1)) / size
  return { x: radius * Math.cos(angle), y: radius * Math.sin(angle) }
}

export function chordMidpoint(size: number, d: Diagonal): Point {
  const a = vertexPoint(size, d[0])
  const b = vertexPoint(size, d[1])
  return { x: (a.x + b.x) / 2, y: (a.y + b.y) / 2 }
}

export function distance(p: Point, q: Point): number {
  return Math.hypot(p.x - q.x, p.y - q.y)
}

// Distance from p to the segment ab, clamping the projection to the segment.
export function distanceToSegment(p: Point, a: Point, b: Point): number {
  const dx = b.x - a.x
  const dy = b.y - a.y
  const lengthSq = dx * dx + dy * dy
  if (lengthSq === 0) return distance(p, a)
  let t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / lengthSq
  t = Math.max(0, Math.min(1, t))
  return distance(p, { x: a.x + t * dx, y: a.y + t * dy })
}

// Nearest chord to p within threshold, or null.  Used as a fallback when a
// click lands on the svg background rather than on a chord element.
export function nearestChord(p: Point, size: number, diagonals: Diagonal[], threshold: number): Diagonal | null {
  let best: Diagonal | null = null
  let bestDist = threshold
  for (const d of diagonals) {
    const dist = distanceToSegment(p, vertexPoint(size, d[0]), vertexPoint(size, d[1]))
    if (dist <= bestDist) {
      best = d
      bestDist = dist
    }
  }
  return best
}
