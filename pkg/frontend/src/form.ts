// Round entry form state: one winner selection per pairing.
//
// The W/L vector is derived from the selections, never typed by hand: the
// winner's rank position gets a W and the paired opponent's position gets
// an L, so the submitted vector is anti-symmetric by construction and
// always passes server validation once every pair has a winner.

import type { Pairing } from "./types.js"

export class RoundEntryForm {
    readonly round: number
    readonly pairings: Pairing[]
    private winners: Map<number, number> = new Map()  // pair index -> winning seed

    constructor(round: number, pairings: Pairing[]) {
        this.round = round
        this.pairings = pairings
    }

    selectWinner(pairIndex: number, seed: number): void {
        const pair = this.pairings[pairIndex]
        if (!pair) {
            throw new Error(`no pairing at index ${pairIndex}`)
        }
        if (!pair.seeds.includes(seed)) {
            throw new Error(`seed ${seed} is not in pairing ${pair.seeds.join(" vs ")}`)
        }
        this.winners.set(pairIndex, seed)
    }

    winnerOf(pairIndex: number): number | undefined {
        return this.winners.get(pairIndex)
    }

    get complete(): boolean {
        return this.winners.size === this.pairings.length
    }

    get missing(): number {
        return this.pairings.length - this.winners.size
    }

    /** Derive the rank-ordered W/L vector; only valid once complete. */
    toResultVector(): string[] {
        if (!this.complete) {
            throw new Error(`${this.missing} pairings still need a winner`)
        }
        const vector = new Array<string>(this.pairings.length * 2).fill("L")
        this.pairings.forEach((pair, index) => {
            const winner = this.winners.get(index)!
            const side = pair.seeds[0] === winner ? 0 : 1
            vector[pair.ranks[side] - 1] = "W"
        })
        return vector
    }

    reset(): void {
        this.winners.clear()
    }
}
