/* tslint:disable */
/* eslint-disable */

/**
 * Every biproduct of every ordered pair, one check per pair that has one.
 */
export function biproducts(src: string, free_compose: boolean): string;

/**
 * Checks each declared witness against the idempotent definition, and
 * against the zero-morphism definition when every homset has a zero.
 */
export function check_witnesses(src: string, free_compose: boolean): string;

/**
 * Names of the built-in example categories, as a JSON array.
 */
export function gallery_names(): string;

/**
 * The text form of a built-in example, or an empty string for an unknown name.
 */
export function gallery_source(name: string): string;

/**
 * Checks the category axioms and, when present, the addition tables.
 */
export function validate(src: string, free_compose: boolean): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly biproducts: (a: number, b: number, c: number) => [number, number];
    readonly check_witnesses: (a: number, b: number, c: number) => [number, number];
    readonly gallery_names: () => [number, number];
    readonly gallery_source: (a: number, b: number) => [number, number];
    readonly validate: (a: number, b: number, c: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
