// DOM rendering. Everything shown here is server-reported; the console
// never ranks players itself. Movement arrows are a display diff between
// the standings the server sent before and after a round.

import { RoundEntryForm } from "./form.js"
import type { Pairing, RoundRecord } from "./types.js"

export function el<K extends keyof HTMLElementTagNameMap>(
    doc: Document,
    parent: Element,
    tag: K,
    className?: string,
    text?: string,
): HTMLElementTagNameMap[K] {
    const node = doc.createElement(tag)
    if (className) node.className = className
    if (text !== undefined) node.textContent = text
    parent.appendChild(node)
    return node
}

export function clear(node: Element): void {
    while (node.firstChild) node.removeChild(node.firstChild)
}

export function renderPairings(
    doc: Document,
    container: Element,
    round: number,
    form: RoundEntryForm,
    onChange: () => void,
): void {
    clear(container)
    el(doc, container, "h2", "", `Round ${round + 1} pairings`)
    const table = el(doc, container, "table", "pairings")
    const head = el(doc, table, "tr")
    for (const title of ["Rank", "Seed", "", "Rank", "Seed", "Winner"]) {
        el(doc, head, "th", "", title)
    }
    form.pairings.forEach((pair, index) => {
        const row = el(doc, table, "tr", "pairing-row")
        el(doc, row, "td", "", String(pair.ranks[0]))
        el(doc, row, "td", "", `#${pair.seeds[0]}`)
        el(doc, row, "td", "vs", "vs")
        el(doc, row, "td", "", String(pair.ranks[1]))
        el(doc, row, "td", "", `#${pair.seeds[1]}`)
        const cell = el(doc, row, "td", "winner-cell")
        pair.seeds.forEach(seed => {
            const button = el(doc, cell, "button", "winner-choice", `#${seed}`)
            button.dataset.pair = String(index)
            button.dataset.seed = String(seed)
            if (form.winnerOf(index) === seed) button.classList.add("selected")
            button.addEventListener("click", () => {
                form.selectWinner(index, seed)
                for (const sibling of Array.from(cell.children)) {
                    sibling.classList.toggle(
                        "selected",
                        (sibling as HTMLElement).dataset.seed === String(seed),
                    )
                }
                onChange()
            })
        })
    })
}

export function renderStandings(
    doc: Document,
    container: Element,
    standings: number[],
    previous: number[] | null,
    eliminated: number[],
): void {
    clear(container)
    el(doc, container, "h2", "", "Standings")
    const out = new Set(eliminated)
    const before = new Map((previous ?? []).map((seed, i) => [seed, i + 1]))
    const table = el(doc, container, "table", "standings")
    const head = el(doc, table, "tr")
    for (const title of ["Rank", "Seed", "Moved", ""]) el(doc, head, "th", "", title)
    standings.forEach((seed, i) => {
        const rank = i + 1
        const row = el(doc, table, "tr", out.has(seed) ? "eliminated" : "active")
        el(doc, row, "td", "", String(rank))
        el(doc, row, "td", "seed", `#${seed}`)
        const was = before.get(seed)
        let arrow = ""
        if (was !== undefined && was !== rank) {
            arrow = was > rank ? `↑${was - rank}` : `↓${rank - was}`
        }
        el(doc, row, "td", "movement", arrow)
        el(doc, row, "td", "status", out.has(seed) ? "eliminated" : "")
    })
    if (eliminated.length > 0) {
        el(
            doc, container, "p", "eliminated-panel",
            `Eliminated this round: ${eliminated.map(s => `#${s}`).join(", ")}`,
        )
    }
}

export function renderChampion(doc: Document, container: Element, champion: number,
                               finalRanking: number[]): void {
    clear(container)
    const banner = el(doc, container, "div", "champion-banner")
    el(doc, banner, "h2", "", `Champion: seed #${champion}`)
    el(doc, banner, "p", "final-ranking",
        `Final ranking: ${finalRanking.map(s => `#${s}`).join(", ")}`)
}

export function renderHistory(doc: Document, container: Element,
                              records: RoundRecord[]): void {
    clear(container)
    el(doc, container, "h2", "", "History")
    if (records.length === 0) {
        el(doc, container, "p", "history-empty", "No rounds recorded yet.")
        return
    }
    const list = el(doc, container, "ol", "timeline")
    for (const record of records) {
        const item = el(doc, list, "li", "round-record")
        el(doc, item, "h3", "", `Round ${record.round + 1}`)
        el(doc, item, "p", "matches",
            record.pairings.map(([a, b], i) =>
                `#${a} ${record.results[i] === "W" ? "beat" : "lost to"} #${b}`,
            ).join("; "))
        el(doc, item, "p", "round-standings",
            `Standings after: ${record.standings.map(s => `#${s}`).join(" ")}`)
        if (record.eliminated.length > 0) {
            el(doc, item, "p", "round-eliminated",
                `Eliminated: ${record.eliminated.map(s => `#${s}`).join(", ")}`)
        }
    }
}

export function renderError(doc: Document, container: Element, message: string): void {
    clear(container)
    if (message) el(doc, container, "p", "error-banner", message)
}

// The winner in a history record's pairing list: results are indexed by the
// pre-round rank, pairings by (best rank, worst rank), so pair i's first
// seat holds result i.
export function pairingWinner(record: RoundRecord, index: number): number {
    const [a, b] = record.pairings[index]
    return record.results[index] === "W" ? a : b
}
