// Wires the panels to a live session.  One operation runs at a time: while
// a request is in flight every input is disabled, and the next render only
// happens once the service has answered.

import { ApiError, SessionApi } from './api'
import type { CreateRequest } from './api'
import { nearestChord } from './geometry'
import { RedoStack } from './history'
import { renderPolygon, renderQuiver, renderRelators } from './panels'
import { rotatedImage } from './rotation'
import type { Diagonal, SessionState } from './types'
import { sameDiagonal } from './types'

const SKELETON = `
  <div class="toolbar">
    <span class="session"></span>
    <span class="cursor"></span>
    <button type="button" class="undo">undo</button>
    <button type="button" class="redo">redo</button>
  </div>
  <div class="notice" hidden></div>
  <div class="panels">
    <svg class="polygon-panel" viewBox="-1.3 -1.3 2.6 2.6"></svg>
    <svg class="quiver-panel" viewBox="-1.3 -1.3 2.6 2.6"></svg>
    <div class="relator-panel">
      <div class="generators"></div>
      <ol class="relators"></ol>
    </div>
  </div>
`

export class Explorer {
  readonly api: SessionApi
  readonly root: HTMLElement
  state: SessionState
  highlight: Diagonal | null = null
  ghost: Diagonal | null = null
  busy = false

  private readonly doc: Document
  private readonly redoStack = new RedoStack()
  private pending: Promise<void> = Promise.resolve()

  private constructor(api: SessionApi, root: HTMLElement, state: SessionState) {
    this.api = api
    this.root = root
    this.state = state
    this.doc = root.ownerDocument
    root.innerHTML = SKELETON
    this.button('.undo').addEventListener('click', () => this.undo())
    this.button('.redo').addEventListener('click', () => this.redo())
    const polygon = root.querySelector('.polygon-panel') as unknown as SVGElement
    polygon.addEventListener('click', (event) => this.polygonClick(event as MouseEvent))
    this.render()
  }

  static async start(api: SessionApi, root: HTMLElement, request: CreateRequest): Promise<Explorer> {
    const created = await api.createSession(request)
    return new Explorer(api, root, created.state)
  }

  // Resolves once any in-flight operation has settled and rendered.
  idle(): Promise<void> {
    return this.pending
  }

  get polygonSize(): number {
    return this.state.n * this.state.m + 2
  }

  clickDiagonal(d: Diagonal): void {
    this.rotate(d, true)
  }

  hoverDiagonal(d: Diagonal): void {
    if (this.busy) return
    this.ghost = rotatedImage(this.polygonSize, this.state.m, this.state.angulation.diagonals, d)
    this.render()
  }

  hoverEnd(): void {
    if (this.ghost === null) return
    this.ghost = null
    this.render()
  }

  clickEdge(edge: Diagonal): void {
    if (this.busy) return
    this.notice(`${edge[0]}-${edge[1]} is a boundary edge; click a diagonal to rotate it`)
  }

  // Clicks that miss every chord element still rotate the nearest diagonal
  // within a tolerance, so thin lines are not the only target.
  private polygonClick(event: MouseEvent): void {
    const target = event.target as Element
    const svg = event.currentTarget as SVGElement
    if (target !== svg && (target.hasAttribute('data-d') || target.hasAttribute('data-edge'))) return
    const rect = svg.getBoundingClientRect()
    if (!rect.width || !rect.height) return
    // map into the viewBox; the tolerance is in drawing units, so it scales
    // with whatever size the panel is shown at
    const x = -1.3 + ((event.clientX - rect.left) / rect.width) * 2.6
    const y = -1.3 + ((event.clientY - rect.top) / rect.height) * 2.6
    const hit = nearestChord({ x, y }, this.polygonSize, this.state.angulation.diagonals, 0.08)
    if (hit) this.clickDiagonal(hit)
  }

  undo(): void {
    if (this.busy || this.state.history.length === 0) return
    const last = this.state.history[this.state.history.length - 1]!
    this.run(async () => {
      this.state = await this.api.undo(this.state.id)
      this.redoStack.push(last.diagonal)
      this.highlight = last.diagonal
      this.ghost = null
      this.clearNotice()
    })
  }

  redo(): void {
    if (this.busy) return
    const d = this.redoStack.pop()
    if (d === undefined) return
    this.rotate(d, false)
  }

  private rotate(d: Diagonal, clearRedo: boolean): void {
    if (this.busy) return
    const predicted = rotatedImage(this.polygonSize, this.state.m, this.state.angulation.diagonals, d)
    this.run(async () => {
      try {
        const state = await this.api.rotate(this.state.id, d)
        this.state = state
        this.highlight = state.rotated ? state.rotated.image : null
        this.ghost = null
        if (clearRedo) this.redoStack.clear()
        this.clearNotice()
        if (state.rotated && !sameDiagonal(predicted, state.rotated.image)) {
          console.warn('local rotation prediction disagreed with the service', d, predicted, state.rotated.image)
        }
      } catch (error) {
        if (error instanceof ApiError && error.status === 422) {
          this.notice(error.detail)
          return
        }
        throw error
      }
    })
  }

  private run(op: () => Promise<void>): void {
    this.busy = true
    this.render()
    this.pending = op()
      .catch((error) => {
        this.notice(error instanceof Error ? error.message : String(error))
      })
      .finally(() => {
        this.busy = false
        this.render()
      })
  }

  private button(selector: string): HTMLButtonElement {
    return this.root.querySelector(selector) as HTMLButtonElement
  }

  private notice(text: string): void {
    const box = this.root.querySelector('.notice') as HTMLElement
    box.textContent = text
    box.removeAttribute('hidden')
  }

  private clearNotice(): void {
    const box = this.root.querySelector('.notice') as HTMLElement
    box.textContent = ''
    box.setAttribute('hidden', '')
  }

  private render(): void {
    const session = this.root.querySelector('.session') as HTMLElement
    session.textContent = `session ${this.state.id} (n=${this.state.n}, m=${this.state.m})`
    const cursor = this.root.querySelector('.cursor') as HTMLElement
    cursor.textContent = `step ${this.state.history.length}`

    this.button('.undo').disabled = this.busy || this.state.history.length === 0
    this.button('.redo').disabled = this.busy || this.redoStack.size === 0

    const polygon = this.root.querySelector('.polygon-panel') as unknown as SVGElement
    renderPolygon(this.doc, polygon, this.state, { highlight: this.highlight, ghost: this.ghost }, {
      clickDiagonal: (d) => this.clickDiagonal(d),
      hoverDiagonal: (d) => this.hoverDiagonal(d),
      hoverEnd: () => this.hoverEnd(),
      clickEdge: (edge) => this.clickEdge(edge),
    })

    const quiver = this.root.querySelector('.quiver-panel') as unknown as SVGElement
    renderQuiver(this.doc, quiver, this.state.quiver, this.polygonSize, {
      clickVertex: (d) => this.clickDiagonal(d),
    })

    const relators = this.root.querySelector('.relator-panel') as HTMLElement
    renderRelators(this.doc, relators, this.state.presentation)
  }
}
