import assert from "node:assert/strict"
import { test } from "node:test"

import { RoundEntryForm } from "../src/form.js"
import type { Pairing } from "../src/types.js"

const SIX_PLAYER_PAIRS: Pairing[] = [
    { ranks: [1, 6], seeds: [1, 6] },
    { ranks: [2, 5], seeds: [2, 5] },
    { ranks: [3, 4], seeds: [3, 4] },
]

test("submission stays blocked until every pair has a winner", () => {
    const form = new RoundEntryForm(0, SIX_PLAYER_PAIRS)
    assert.equal(form.complete, false)
    assert.equal(form.missing, 3)
    assert.throws(() => form.toResultVector(), /need a winner/)
    form.selectWinner(0, 1)
    form.selectWinner(1, 5)
    assert.equal(form.complete, false)
    form.selectWinner(2, 4)
    assert.equal(form.complete, true)
    assert.equal(form.missing, 0)
})

test("derived vector puts W at the winner's rank and L at the partner's", () => {
    const form = new RoundEntryForm(0, SIX_PLAYER_PAIRS)
    form.selectWinner(0, 1)   // rank 1 beat rank 6
    form.selectWinner(1, 5)   // rank 5 beat rank 2
    form.selectWinner(2, 4)   // rank 4 beat rank 3
    assert.deepEqual(form.toResultVector(), ["W", "L", "L", "W", "W", "L"])
})

test("every selection combination is anti-symmetric by construction", () => {
    for (let mask = 0; mask < 8; mask++) {
        const form = new RoundEntryForm(0, SIX_PLAYER_PAIRS)
        SIX_PLAYER_PAIRS.forEach((pair, index) => {
            form.selectWinner(index, pair.seeds[(mask >> index) & 1])
        })
        const vector = form.toResultVector()
        const n = vector.length
        for (let i = 0; i < n / 2; i++) {
            assert.notEqual(vector[i], vector[n - 1 - i], `mask ${mask} index ${i}`)
        }
    }
})

test("re-selecting a pair replaces the previous winner", () => {
    const form = new RoundEntryForm(0, SIX_PLAYER_PAIRS)
    form.selectWinner(0, 1)
    form.selectWinner(0, 6)
    assert.equal(form.winnerOf(0), 6)
    form.selectWinner(1, 2)
    form.selectWinner(2, 3)
    assert.deepEqual(form.toResultVector(), ["L", "W", "W", "L", "L", "W"])
})

test("selections are validated against the pairing", () => {
    const form = new RoundEntryForm(0, SIX_PLAYER_PAIRS)
    assert.throws(() => form.selectWinner(0, 3), /not in pairing/)
    assert.throws(() => form.selectWinner(9, 1), /no pairing/)
})

test("reset clears all selections", () => {
    const form = new RoundEntryForm(0, SIX_PLAYER_PAIRS)
    SIX_PLAYER_PAIRS.forEach((pair, i) => form.selectWinner(i, pair.seeds[0]))
    form.reset()
    assert.equal(form.complete, false)
    assert.equal(form.winnerOf(0), undefined)
})
