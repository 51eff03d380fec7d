/* tslint:disable */
/* eslint-disable */

/**
 * `log10 |K_N - K_ref|` for `N = 0..=max_terms`, one vector per series.
 */
export class Convergence {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly doob: Float64Array;
    readonly theta: Float64Array;
}

export class Crossing {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    estimate: number;
    std_error: number;
}

/**
 * One wedge evaluation with its provenance.
 */
export class Evaluation {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly ab_plus: number;
    readonly formula: string;
    readonly remainder_bound: number;
    /**
     * Threshold on `a+ b+` separating the two series at this term count.
     */
    readonly tau: number;
    readonly terms: number;
    readonly value: number;
}

export function convergence(a1: number, b1: number, a2: number, b2: number, max_terms: number): Convergence;

export function crossing(lower: Float64Array, upper: Float64Array, horizon: number, samples: number, seed: bigint): Crossing;

export function evaluate(a1: number, b1: number, a2: number, b2: number, terms: number): Evaluation;

export function thresholdTable(): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_convergence_free: (a: number, b: number) => void;
    readonly __wbg_crossing_free: (a: number, b: number) => void;
    readonly __wbg_evaluation_free: (a: number, b: number) => void;
    readonly __wbg_get_crossing_estimate: (a: number) => number;
    readonly __wbg_get_crossing_std_error: (a: number) => number;
    readonly __wbg_set_crossing_estimate: (a: number, b: number) => void;
    readonly __wbg_set_crossing_std_error: (a: number, b: number) => void;
    readonly convergence: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly convergence_doob: (a: number) => [number, number];
    readonly convergence_theta: (a: number) => [number, number];
    readonly crossing: (a: number, b: number, c: number, d: number, e: number, f: number, g: bigint) => [number, number, number];
    readonly evaluate: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly evaluation_ab_plus: (a: number) => number;
    readonly evaluation_formula: (a: number) => [number, number];
    readonly evaluation_remainder_bound: (a: number) => number;
    readonly evaluation_tau: (a: number) => number;
    readonly evaluation_terms: (a: number) => number;
    readonly evaluation_value: (a: number) => number;
    readonly thresholdTable: () => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
