/**
 * Wire protocol between the canvas app and the engine bridge.
 *
 * The UI owns no geometry: commands go in, render frames come out. Pointer
 * coordinates are already in engine pixels (the canvas is unscaled).
 */

export type ButtonName = "Left" | "Right";

export type CursorName =
  | "Arrow"
  | "Hand"
  | "SizeNS"
  | "SizeWE"
  | "SizeNWSE"
  | "SizeNESW"
  | "SizeAll";

/** Every cursor tag maps onto a distinct native CSS cursor. */
export const CURSOR_CSS: Record<CursorName, string> = {
  Arrow: "default",
  Hand: "grab",
  SizeNS: "ns-resize",
  SizeWE: "ew-resize",
  SizeNWSE: "nwse-resize",
  SizeNESW: "nesw-resize",
  SizeAll: "move",
};

export interface PointerCommand {
  command: "pointerDown" | "pointerMove" | "pointerUp";
  button?: ButtonName;
  x: number;
  y: number;
}

export interface AddObjectCommand {
  command: "addObject";
  kind: string;
}

export interface RestackCommand {
  command: "restack";
  objectId: string;
  to: "top" | "bottom";
}

export interface DeleteCommand {
  command: "deleteObject";
  objectId: string;
}

export interface ToggleCoversCommand {
  command: "toggleCovers";
}

export interface SaveSceneCommand {
  command: "saveScene";
}

export interface LoadSceneCommand {
  command: "loadScene";
  payload: string;
}

export type UiCommand =
  | PointerCommand
  | AddObjectCommand
  | RestackCommand
  | DeleteCommand
  | ToggleCoversCommand
  | SaveSceneCommand
  | LoadSceneCommand;

/** One draw operation from the engine's render list, bottom to top. */
export interface DrawOp {
  op: string;
  [key: string]: unknown;
}

export interface UiFrame {
  shapes: DrawOp[];
  cursor: CursorName;
  coversVisible: boolean;
  moved: boolean;
  objects: { id: string; kind: string }[];
  error: string;
  scene?: string;
}

export const PALETTE_KINDS = [
  "rectangle-any",
  "rectangle-ns",
  "rectangle-we",
  "rectangle-none",
  "loop",
  "regular-polygon-apex",
  "regular-polygon-border",
  "regular-polygon-fixed",
  "chatoyant-polygon",
  "ring",
  "group",
  "control-frame",
  "plot",
] as const;

export function pointerCommand(
  kind: PointerCommand["command"],
  x: number,
  y: number,
  button: ButtonName = "Left",
): PointerCommand {
  return kind === "pointerDown" ? { command: kind, button, x, y } : { command: kind, x, y };
}

/**
 * Repaint only when the engine reports movement or the cursor changed —
 * hover noise does not redraw the scene.
 */
export function needsRepaint(previous: UiFrame | null, next: UiFrame): boolean {
  if (previous === null || next.moved) return true;
  return previous.cursor !== next.cursor;
}
