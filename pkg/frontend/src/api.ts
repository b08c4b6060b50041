// Thin client for the session service.  Every method returns the parsed
// JSON body or throws an ApiError carrying the HTTP status.

import type { AngulationDoc, Diagonal, SessionState } from './types'

export class ApiError extends Error {
  readonly status: number
  readonly detail: string

  constructor(status: number, detail: string) {
    super(`${status}: ${detail}`)
    this.status = status
    this.detail = detail
  }
}

export type CreateRequest = { n: number; m: number } | { angulation: AngulationDoc }

export interface CreateResponse {
  id: string
  state: SessionState
}

export class SessionApi {
  readonly base: string

  constructor(base: string) {
    this.base = base.replace(/\/$/, '')
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(this.base + path, init)
    if (!response.ok) {
      let detail = response.statusText
      try {
        const body = (await response.json()) as { detail?: unknown }
        if (body.detail !== undefined) {
          detail = typeof body.detail === 'string' ? body.detail : JSON.stringify(body.detail)
        }
      } catch {
        // keep the status text
      }
      throw new ApiError(response.status, detail)
    }
    return (await response.json()) as T
  }

  private post<T>(path: string, body: unknown): Promise<T> {
    return this.request<T>(path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(body),
    })
  }

  createSession(request: CreateRequest): Promise<CreateResponse> {
    return this.post<CreateResponse>('/sessions', request)
  }

  getState(id: string): Promise<SessionState> {
    return this.request<SessionState>(`/sessions/${id}`)
  }

  rotate(id: string, diagonal: Diagonal): Promise<SessionState> {
    return this.post<SessionState>(`/sessions/${id}/rotate`, { diagonal })
  }

  undo(id: string): Promise<SessionState> {
    return this.request<SessionState>(`/sessions/${id}/undo`, { method: 'POST' })
  }

  async presentationText(id: string): Promise<string> {
    const response = await fetch(`${this.base}/sessions/${id}/presentation?format=text`)
    if (!response.ok) throw new ApiError(response.status, response.statusText)
    return response.text()
  }
}
