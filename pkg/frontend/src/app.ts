// Console controller: owns the current tournament, the round entry form,
// and the polling loop, and repaints the page regions after every change.
//
// Slots expected in the root element (see index.html):
//   [data-slot=setup] [data-slot=error] [data-slot=pairings]
//   [data-slot=standings] [data-slot=submit] [data-slot=history]

import { ApiClient, ApiError } from "./api.js"
import { RoundEntryForm } from "./form.js"
import type { Pairing, TournamentState } from "./types.js"
import {
    clear,
    el,
    renderChampion,
    renderError,
    renderHistory,
    renderPairings,
    renderStandings,
} from "./views.js"

export class ConsoleApp {
    client: ApiClient
    doc: Document
    root: Element
    tournamentId: string | null = null
    form: RoundEntryForm | null = null
    previousStandings: number[] | null = null
    lastEliminated: number[] = []
    private timer: ReturnType<typeof setInterval> | null = null

    constructor(client: ApiClient, doc: Document, root: Element) {
        this.client = client
        this.doc = doc
        this.root = root
        this.renderSetup()
    }

    private slot(name: string): Element {
        const node = this.root.querySelector(`[data-slot=${name}]`)
        if (!node) throw new Error(`missing slot ${name}`)
        return node
    }

    // ------------------------------------------------------------------
    // setup
    // ------------------------------------------------------------------

    private renderSetup(): void {
        const setup = this.slot("setup")
        clear(setup)
        el(this.doc, setup, "h2", "", "New tournament")
        const formRow = el(this.doc, setup, "div", "setup-row")
        const players = el(this.doc, formRow, "input", "players-input")
        players.type = "number"
        players.value = "6"
        players.name = "players"
        const rounds = el(this.doc, formRow, "input", "rounds-input")
        rounds.type = "number"
        rounds.value = "3"
        rounds.name = "rounds"
        const create = el(this.doc, formRow, "button", "create-button", "Create")
        create.addEventListener("click", () => {
            void this.createTournament(Number(players.value), Number(rounds.value))
        })
        const resume = el(this.doc, setup, "div", "resume-list")
        void this.renderResumeList(resume)
    }

    private async renderResumeList(container: Element): Promise<void> {
        try {
            const entries = await this.client.listTournaments()
            clear(container)
            if (entries.length === 0) return
            el(this.doc, container, "h3", "", "Resume")
            for (const entry of entries) {
                const button = el(
                    this.doc, container, "button", "resume-button",
                    `${entry.id} (${entry.players} players, round ${entry.round + 1}` +
                    `/${entry.rounds}, ${entry.status})`,
                )
                button.addEventListener("click", () => void this.openTournament(entry.id))
            }
        } catch {
            // listing is best-effort; the create form still works
        }
    }

    async createTournament(players: number, rounds: number): Promise<void> {
        try {
            const state = await this.client.createTournament(players, rounds)
            this.previousStandings = null
            this.lastEliminated = []
            this.tournamentId = state.id
            await this.refresh()
        } catch (error) {
            this.showError(error)
        }
    }

    async openTournament(id: string): Promise<void> {
        this.tournamentId = id
        this.previousStandings = null
        this.lastEliminated = []
        await this.refresh()
    }

    // ------------------------------------------------------------------
    // round flow
    // ------------------------------------------------------------------

    async refresh(): Promise<void> {
        if (!this.tournamentId) return
        try {
            const state = await this.client.getState(this.tournamentId)
            const history = await this.client.getHistory(this.tournamentId)
            renderHistory(this.doc, this.slot("history"), history)
            this.showError("")
            if (state.status === "completed") {
                this.renderCompleted(state)
                return
            }
            const pairings = await this.client.getPairings(this.tournamentId)
            if (!this.form || this.form.round !== pairings.round) {
                this.form = new RoundEntryForm(pairings.round, pairings.pairings)
            }
            renderPairings(
                this.doc, this.slot("pairings"), pairings.round, this.form,
                () => this.renderSubmit(),
            )
            renderStandings(
                this.doc, this.slot("standings"), state.standings,
                this.previousStandings, this.lastEliminated,
            )
            this.renderSubmit()
        } catch (error) {
            this.showError(error)
        }
    }

    private renderSubmit(): void {
        const container = this.slot("submit")
        clear(container)
        if (!this.form) return
        const button = el(this.doc, container, "button", "submit-round", "Submit round")
        button.disabled = !this.form.complete
        if (!this.form.complete) {
            el(this.doc, container, "span", "submit-hint",
                ` ${this.form.missing} match(es) still need a winner`)
        }
        button.addEventListener("click", () => void this.submitRound())
    }

    async submitRound(): Promise<void> {
        if (!this.tournamentId || !this.form || !this.form.complete) return
        try {
            const before = await this.client.getState(this.tournamentId)
            const outcome = await this.client.submitResults(
                this.tournamentId, this.form.round, this.form.toResultVector(),
            )
            this.showError("")
            // show the round's own view first: the full post-rerank order
            // with this round's eliminations marked, arrows vs what was on
            // screen before the submit
            this.previousStandings = before.standings
            this.lastEliminated = outcome.eliminated
            renderStandings(
                this.doc, this.slot("standings"), outcome.standings,
                before.standings, outcome.eliminated,
            )
            renderHistory(
                this.doc, this.slot("history"),
                await this.client.getHistory(this.tournamentId),
            )
            if (outcome.status === "completed") {
                this.form = null
                clear(this.slot("submit"))
                renderChampion(
                    this.doc, this.slot("pairings"),
                    outcome.champion!, outcome.finalRanking ?? outcome.standings,
                )
                return
            }
            this.form = new RoundEntryForm(outcome.round + 1, outcome.nextPairings ?? [])
            renderPairings(
                this.doc, this.slot("pairings"), this.form.round, this.form,
                () => this.renderSubmit(),
            )
            this.renderSubmit()
        } catch (error) {
            // 409/422: keep the form state so nothing retyped is lost
            this.showError(error)
        }
    }

    private renderCompleted(state: TournamentState): void {
        clear(this.slot("pairings"))
        clear(this.slot("submit"))
        renderChampion(
            this.doc, this.slot("pairings"),
            state.champion!, state.finalRanking ?? state.standings,
        )
        renderStandings(
            this.doc, this.slot("standings"), state.standings,
            this.previousStandings, this.lastEliminated,
        )
    }

    private showError(error: unknown): void {
        let message = ""
        if (error instanceof ApiError) {
            message = error.status === 409
                ? `Round already recorded or out of date: ${error.message}`
                : error.message
        } else if (error instanceof Error) {
            message = `Request failed (is the service running?): ${error.message}`
        } else if (typeof error === "string") {
            message = error
        }
        renderError(this.doc, this.slot("error"), message)
    }

    // ------------------------------------------------------------------
    // polling
    // ------------------------------------------------------------------

    startPolling(intervalMs = 4000): void {
        this.stopPolling()
        this.timer = setInterval(() => void this.refresh(), intervalMs)
    }

    stopPolling(): void {
        if (this.timer !== null) {
            clearInterval(this.timer)
            this.timer = null
        }
    }
}
