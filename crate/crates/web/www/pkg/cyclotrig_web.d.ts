/* tslint:disable */
/* eslint-disable */

/**
 * The walk `sum_{j<k} zeta_n^(j^2)` for k = 0..=n, whose endpoint is the
 * Gauss sum, plus the closed form it lands on.
 */
export function gauss_walk(n: number): string;

/**
 * Searches `tan(a pi/n) + sum(+-4 sin(b pi/n)) = +-sqrt(m)`.
 */
export function search(denominators: string, surds: string, max_sin: number): string;

/**
 * Decides `"<lhs> = <rhs>"` exactly.
 */
export function verify_identity(text: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly gauss_walk: (a: number) => [number, number];
    readonly search: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly verify_identity: (a: number, b: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
