// Wire types for the tournament service's JSON API.

export interface Pairing {
    ranks: [number, number]
    seeds: [number, number]
}

export interface TournamentConfig {
    players: number
    rounds: number
    passes: number
}

export interface TournamentSummary {
    id: string
    players: number
    rounds: number
    round: number
    status: "in-progress" | "completed"
}

export interface TournamentState {
    id: string
    config: TournamentConfig
    schedule: number[]
    round: number
    status: "in-progress" | "completed"
    champion: number | null
    standings: number[]
    finalRanking?: number[]
    pairings?: Pairing[]
}

export interface PairingsView {
    round: number
    status: "in-progress" | "completed"
    champion?: number
    pairings: Pairing[]
}

export interface RoundRecord {
    round: number
    pairings: [number, number][]
    results: string[]
    standings: number[]
    eliminated: number[]
}

export interface RoundOutcome {
    round: number
    standings: number[]
    eliminated: number[]
    status: "in-progress" | "completed"
    champion?: number
    finalRanking?: number[]
    nextPairings?: Pairing[]
}
