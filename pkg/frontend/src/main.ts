// Page bootstrap: read the form, create a session, hand the page over to
// the explorer.

import { SessionApi } from './api'
import { Explorer } from './explorer'

function field(form: HTMLFormElement, name: string): HTMLInputElement {
  return form.querySelector(`[name=${name}]`) as HTMLInputElement
}

async function launch(form: HTMLFormElement, mount: HTMLElement): Promise<void> {
  const status = document.querySelector('#form-status') as HTMLElement
  status.textContent = ''
  const api = new SessionApi(field(form, 'server').value)
  const n = Number(field(form, 'n').value)
  const m = Number(field(form, 'm').value)
  try {
    const explorer = await Explorer.start(api, mount, { n, m })
    // handy when poking at a session from the console
    Object.assign(window as unknown as Record<string, unknown>, { explorer })
  } catch (error) {
    status.textContent = error instanceof Error ? error.message : String(error)
  }
}

const form = document.querySelector('#start') as HTMLFormElement
const mount = document.querySelector('#explorer') as HTMLElement
form.addEventListener('submit', (event) => {
  event.preventDefault()
  void launch(form, mount)
})
