// Wire shapes of the session service.  Diagonals travel as ascending pairs.

export type Diagonal = [number, number]

export interface AngulationDoc {
  n: number
  m: number
  diagonals: Diagonal[]
}

export interface QuiverArrow {
  from: Diagonal
  to: Diagonal
  colour: number
  mult: number
}

export interface QuiverDoc {
  m: number
  vertices: Diagonal[]
  arrows: QuiverArrow[]
}

export interface Relator {
  kind: string
  lhs: string[]
  rhs: string[]
}

export interface PresentationDoc {
  generators: string[]
  relators: Relator[]
}

export interface HistoryEntry {
  diagonal: Diagonal
  image: Diagonal
}

export interface SessionState {
  id: string
  n: number
  m: number
  angulation: AngulationDoc
  quiver: QuiverDoc
  presentation: PresentationDoc
  history: HistoryEntry[]
  state_hash: string
  quiver_hash: string
  rotated?: { diagonal: Diagonal; image: Diagonal }
}

export function sameDiagonal(a: Diagonal, b: Diagonal): boolean {
  return a[0] === b[0] && a[1] === b[1]
}

export function normalizePair(a: number, b: number): Diagonal {
  return a < b ? [a, b] : [b, a]
}
