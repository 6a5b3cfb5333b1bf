// Browser bootstrap: read the API base URL (?api=... wins, then
// localStorage, then the default local service port) and mount the app.

import { ApiClient } from "./api.js"
import { ConsoleApp } from "./app.js"

const DEFAULT_API = "http://127.0.0.1:8440"

function apiBase(): string {
    const fromQuery = new URLSearchParams(window.location.search).get("api")
    if (fromQuery) {
        window.localStorage.setItem("linelim-api", fromQuery)
        return fromQuery
    }
    return window.localStorage.getItem("linelim-api") ?? DEFAULT_API
}

const root = document.getElementById("console")
if (!root) throw new Error("missing #console element")
const app = new ConsoleApp(new ApiClient(apiBase()), document, root)
app.startPolling()
;(window as unknown as { consoleApp: ConsoleApp }).consoleApp = app
