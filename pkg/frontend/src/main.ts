/**
 * Browser demo: every pointer event round-trips through the engine bridge,
 * so what you drag here is exactly what the headless replay reproduces.
 */

import { EngineClient } from "./engine.js";
import {
  CURSOR_CSS,
  CursorName,
  PALETTE_KINDS,
  UiFrame,
  needsRepaint,
  pointerCommand,
} from "./protocol.js";
import { paintFrame } from "./render.js";

const canvas = document.getElementById("scene") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const engine = new EngineClient("");
const statusLine = document.getElementById("status")!;
const objectList = document.getElementById("objects")!;
const menu = document.getElementById("menu")!;

let lastFrame: UiFrame | null = null;
let pointerHeld = false;
let menuTargetId: string | null = null;

function show(frame: UiFrame): void {
  if (needsRepaint(lastFrame, frame)) {
    paintFrame(ctx, frame.shapes, canvas.width, canvas.height);
    renderObjectList(frame);
  }
  canvas.style.cursor = CURSOR_CSS[frame.cursor as CursorName] ?? "default";
  statusLine.textContent = frame.error ? frame.error : `cursor: ${frame.cursor}`;
  lastFrame = frame;
}

function renderObjectList(frame: UiFrame): void {
  objectList.textContent = "";
  for (const obj of frame.objects) {
    const row = document.createElement("li");
    row.textContent = `${obj.id} (${obj.kind})`;
    row.addEventListener("click", (ev) => {
      menuTargetId = obj.id;
      menu.style.left = `${ev.pageX}px`;
      menu.style.top = `${ev.pageY}px`;
      menu.style.display = "block";
      ev.stopPropagation();
    });
    objectList.appendChild(row);
  }
}

function canvasPoint(ev: MouseEvent): { x: number; y: number } {
  const rect = canvas.getBoundingClientRect();
  return { x: ev.clientX - rect.left, y: ev.clientY - rect.top };
}

canvas.addEventListener("contextmenu", (ev) => ev.preventDefault());

canvas.addEventListener("mousedown", async (ev) => {
  const { x, y } = canvasPoint(ev);
  pointerHeld = true;
  const button = ev.button === 2 ? "Right" : "Left";
  show(await engine.send(pointerCommand("pointerDown", x, y, button)));
});

canvas.addEventListener("mousemove", async (ev) => {
  const { x, y } = canvasPoint(ev);
  show(await engine.send(pointerCommand("pointerMove", x, y)));
});

const finishDrag = async (ev: MouseEvent) => {
  if (!pointerHeld) return;
  pointerHeld = false;
  const { x, y } = canvasPoint(ev);
  show(await engine.send(pointerCommand("pointerUp", x, y)));
};
canvas.addEventListener("mouseup", finishDrag);
canvas.addEventListener("mouseleave", finishDrag);

document.addEventListener("click", () => {
  menu.style.display = "none";
});

for (const [action, to] of [["menu-top", "top"], ["menu-bottom", "bottom"]] as const) {
  document.getElementById(action)!.addEventListener("click", async () => {
    if (menuTargetId) {
      show(await engine.send({ command: "restack", objectId: menuTargetId, to }));
    }
  });
}

document.getElementById("menu-delete")!.addEventListener("click", async () => {
  if (menuTargetId) {
    show(await engine.send({ command: "deleteObject", objectId: menuTargetId }));
  }
});

document.getElementById("toggle-covers")!.addEventListener("click", async () => {
  show(await engine.send({ command: "toggleCovers" }));
});

document.getElementById("save-scene")!.addEventListener("click", async () => {
  const frame = await engine.send({ command: "saveScene" });
  show(frame);
  download("scene.scene", frame.scene ?? "");
});

document.getElementById("export-trace")!.addEventListener("click", async () => {
  download("session.trace", await engine.traceText());
});

const fileInput = document.getElementById("load-scene") as HTMLInputElement;
fileInput.addEventListener("change", async () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  show(await engine.send({ command: "loadScene", payload: await file.text() }));
  fileInput.value = "";
});

function download(name: string, text: string): void {
  const link = document.createElement("a");
  link.href = URL.createObjectURL(new Blob([text], { type: "text/plain" }));
  link.download = name;
  link.click();
  URL.revokeObjectURL(link.href);
}

const palette = document.getElementById("palette")!;
for (const kind of PALETTE_KINDS) {
  const button = document.createElement("button");
  button.textContent = kind;
  button.addEventListener("click", async () => {
    show(await engine.send({ command: "addObject", kind }));
  });
  palette.appendChild(button);
}

const demoSelect = document.getElementById("demo-select") as HTMLSelectElement;

async function boot(): Promise<void> {
  const demos = await engine.demos();
  for (const name of demos) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    demoSelect.appendChild(option);
  }
  demoSelect.value = demos.includes("medley") ? "medley" : demos[0];
  demoSelect.addEventListener("change", async () => {
    show(await engine.newSession({ demo: demoSelect.value }));
  });
  show(await engine.newSession({ demo: demoSelect.value }));
}

boot().catch((err) => {
  statusLine.textContent = `bridge unreachable: ${err}`;
});
