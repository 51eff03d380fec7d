/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_convergence_free: (a: number, b: number) => void;
export const __wbg_crossing_free: (a: number, b: number) => void;
export const __wbg_evaluation_free: (a: number, b: number) => void;
export const __wbg_get_crossing_estimate: (a: number) => number;
export const __wbg_get_crossing_std_error: (a: number) => number;
export const __wbg_set_crossing_estimate: (a: number, b: number) => void;
export const __wbg_set_crossing_std_error: (a: number, b: number) => void;
export const convergence: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const convergence_doob: (a: number) => [number, number];
export const convergence_theta: (a: number) => [number, number];
export const crossing: (a: number, b: number, c: number, d: number, e: number, f: number, g: bigint) => [number, number, number];
export const evaluate: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const evaluation_ab_plus: (a: number) => number;
export const evaluation_formula: (a: number) => [number, number];
export const evaluation_remainder_bound: (a: number) => number;
export const evaluation_tau: (a: number) => number;
export const evaluation_terms: (a: number) => number;
export const evaluation_value: (a: number) => number;
export const thresholdTable: () => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_start: () => void;
