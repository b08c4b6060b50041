// The three display panels: polygon, quiver graph, relator list.  Pure
// DOM construction; every render rebuilds the panel from the given state.

import { canonicalStringify } from './canonical'
import { chordMidpoint, vertexPoint } from './geometry'
import type { Point } from './geometry'
import type { Diagonal, PresentationDoc, QuiverDoc, SessionState } from './types'
import { sameDiagonal } from './types'

export interface PolygonView {
  highlight: Diagonal | null
  ghost: Diagonal | null
}

export interface PolygonHandlers {
  clickDiagonal(d: Diagonal): void
  hoverDiagonal(d: Diagonal): void
  hoverEnd(): void
  clickEdge(edge: Diagonal): void
}

const SVG_NS = 'http://www.w3.org/2000/svg'

function svgNode(doc: Document, tag: string, attrs: Record<string, string>): SVGElement {
  const node = doc.createElementNS(SVG_NS, tag) as SVGElement
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value)
  }
  return node
}

function chordLine(doc: Document, size: number, d: Diagonal, attrs: Record<string, string>): SVGElement {
  const a = vertexPoint(size, d[0])
  const b = vertexPoint(size, d[1])
  return svgNode(doc, 'line', {
    x1: a.x.toFixed(4),
    y1: a.y.toFixed(4),
    x2: b.x.toFixed(4),
    y2: b.y.toFixed(4),
    ...attrs,
  })
}

export function renderPolygon(
  doc: Document,
  svg: SVGElement,
  state: SessionState,
  view: PolygonView,
  handlers: PolygonHandlers,
): void {
  const size = state.n * state.m + 2
  svg.replaceChildren()

  for (let v = 1; v <= size; v++) {
    const w = (v % size) + 1
    const edge = chordLine(doc, size, [v, w], { class: 'edge', 'data-edge': `${v},${w}` })
    edge.addEventListener('click', () => handlers.clickEdge([v, w]))
    svg.appendChild(edge)
  }

  for (const d of state.angulation.diagonals) {
    const classes = ['diagonal']
    if (view.highlight && sameDiagonal(d, view.highlight)) classes.push('highlight')
    const line = chordLine(doc, size, d, { class: classes.join(' '), 'data-d': `${d[0]},${d[1]}` })
    line.addEventListener('click', () => handlers.clickDiagonal(d))
    line.addEventListener('mouseenter', () => handlers.hoverDiagonal(d))
    line.addEventListener('mouseleave', () => handlers.hoverEnd())
    svg.appendChild(line)
  }

  if (view.ghost) {
    const ghost = chordLine(doc, size, view.ghost, {
      class: 'ghost',
      'data-ghost': `${view.ghost[0]},${view.ghost[1]}`,
      'pointer-events': 'none',
    })
    svg.appendChild(ghost)
  }

  for (let v = 1; v <= size; v++) {
    const p = vertexPoint(size, v, 1.14)
    const label = svgNode(doc, 'text', {
      x: p.x.toFixed(4),
      y: p.y.toFixed(4),
      class: 'vertex-label',
      'text-anchor': 'middle',
      'dominant-baseline': 'middle',
      'pointer-events': 'none',
    })
    label.textContent = String(v)
    svg.appendChild(label)
  }
}

// Shrink the segment from a to b by the node radius at both ends.
function trim(a: Point, b: Point, radius: number): [Point, Point] {
  const length = Math.hypot(b.x - a.x, b.y - a.y)
  if (length < 2 * radius) return [a, b]
  const t = radius / length
  return [
    { x: a.x + (b.x - a.x) * t, y: a.y + (b.y - a.y) * t },
    { x: b.x - (b.x - a.x) * t, y: b.y - (b.y - a.y) * t },
  ]
}

export interface QuiverHandlers {
  clickVertex(d: Diagonal): void
}

export function renderQuiver(doc: Document, svg: SVGElement, quiver: QuiverDoc, size: number, handlers: QuiverHandlers): void {
  svg.replaceChildren()
  svg.setAttribute('data-quiver', canonicalStringify(quiver))

  const defs = svgNode(doc, 'defs', {})
  const marker = svgNode(doc, 'marker', {
    id: 'arrowhead',
    viewBox: '0 0 6 6',
    refX: '5',
    refY: '3',
    markerWidth: '5',
    markerHeight: '5',
    orient: 'auto-start-reverse',
  })
  marker.appendChild(svgNode(doc, 'path', { d: 'M 0 0 L 6 3 L 0 6 z', class: 'arrowhead' }))
  defs.appendChild(marker)
  svg.appendChild(defs)

  const ring = svgNode(doc, 'circle', { cx: '0', cy: '0', r: '1', class: 'outline' })
  svg.appendChild(ring)

  for (const arrow of quiver.arrows) {
    const from = chordMidpoint(size, arrow.from)
    const to = chordMidpoint(size, arrow.to)
    const [start, end] = trim(from, to, 0.09)
    const midX = (start.x + end.x) / 2
    const midY = (start.y + end.y) / 2
    const length = Math.hypot(end.x - start.x, end.y - start.y) || 1
    // bow each arrow to the right of its direction so opposite pairs split
    const normX = (end.y - start.y) / length
    const normY = (start.x - end.x) / length
    const bow = 0.1
    const ctrlX = midX + normX * bow
    const ctrlY = midY + normY * bow
    const path = svgNode(doc, 'path', {
      d: `M ${start.x.toFixed(4)} ${start.y.toFixed(4)} Q ${ctrlX.toFixed(4)} ${ctrlY.toFixed(4)} ${end.x.toFixed(4)} ${end.y.toFixed(4)}`,
      class: 'arrow',
      fill: 'none',
      'marker-end': 'url(#arrowhead)',
      'data-colour': String(arrow.colour),
    })
    svg.appendChild(path)
    const label = svgNode(doc, 'text', {
      x: (midX + normX * (bow + 0.08)).toFixed(4),
      y: (midY + normY * (bow + 0.08)).toFixed(4),
      class: 'arrow-label',
      'text-anchor': 'middle',
      'dominant-baseline': 'middle',
      'pointer-events': 'none',
    })
    label.textContent = arrow.mult > 1 ? `(${arrow.colour})×${arrow.mult}` : `(${arrow.colour})`
    svg.appendChild(label)
  }

  for (const vertex of quiver.vertices) {
    const p = chordMidpoint(size, vertex)
    const node = svgNode(doc, 'circle', {
      cx: p.x.toFixed(4),
      cy: p.y.toFixed(4),
      r: '0.07',
      class: 'qvertex',
      'data-d': `${vertex[0]},${vertex[1]}`,
    })
    node.addEventListener('click', () => handlers.clickVertex(vertex))
    svg.appendChild(node)
    const label = svgNode(doc, 'text', {
      x: p.x.toFixed(4),
      y: (p.y - 0.12).toFixed(4),
      class: 'qvertex-label',
      'text-anchor': 'middle',
      'pointer-events': 'none',
    })
    label.textContent = `${vertex[0]},${vertex[1]}`
    svg.appendChild(label)
  }
}

export function renderRelators(doc: Document, panel: HTMLElement, presentation: PresentationDoc): void {
  const generators = panel.querySelector('.generators')
  if (generators) generators.textContent = 'generators: ' + presentation.generators.join(' ')
  const list = panel.querySelector('.relators')
  if (!list) return
  list.replaceChildren()
  for (const relator of presentation.relators) {
    const item = doc.createElement('li')
    item.textContent = `${relator.lhs.join(' ')} = ${relator.rhs.join(' ')}`
    item.setAttribute('data-kind', relator.kind)
    list.appendChild(item)
  }
}
