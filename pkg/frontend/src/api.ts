// Thin fetch client for the tournament service.
//
// Server errors surface as ApiError with the HTTP status and the server's
// detail message, so views can distinguish a stale round (409) from an
// invalid vector (422) or a missing tournament (404).

import type {
    PairingsView,
    RoundOutcome,
    RoundRecord,
    TournamentState,
    TournamentSummary,
} from "./types.js"

export class ApiError extends Error {
    status: number
    constructor(status: number, message: string) {
        super(message)
        this.status = status
    }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>

export class ApiClient {
    baseUrl: string
    fetchImpl: FetchLike

    constructor(baseUrl: string, fetchImpl?: FetchLike) {
        this.baseUrl = baseUrl.replace(/\/+$/, "")
        this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init))
    }

    private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
        const init: RequestInit = { method, headers: {} }
        if (body !== undefined) {
            init.headers = { "content-type": "application/json" }
            init.body = JSON.stringify(body)
        }
        const response = await this.fetchImpl(this.baseUrl + path, init)
        if (!response.ok) {
            let detail = `${response.status}`
            try {
                const payload = await response.json()
                detail = typeof payload.detail === "string"
                    ? payload.detail
                    : JSON.stringify(payload.detail ?? payload)
            } catch {
                // non-JSON error body; keep the status text
            }
            throw new ApiError(response.status, detail)
        }
        return response.json() as Promise<T>
    }

    listTournaments(): Promise<TournamentSummary[]> {
        return this.request("GET", "/tournaments")
    }

    createTournament(players: number, rounds: number): Promise<TournamentState> {
        return this.request("POST", "/tournaments", { players, rounds })
    }

    getState(id: string): Promise<TournamentState> {
        return this.request("GET", `/tournaments/${id}`)
    }

    getPairings(id: string): Promise<PairingsView> {
        return this.request("GET", `/tournaments/${id}/pairings`)
    }

    getHistory(id: string): Promise<RoundRecord[]> {
        return this.request<{ history: RoundRecord[] }>(
            "GET", `/tournaments/${id}/history`,
        ).then(doc => doc.history)
    }

    submitResults(id: string, round: number, results: string[]): Promise<RoundOutcome> {
        return this.request("POST", `/tournaments/${id}/rounds/${round}/results`, { results })
    }
}
