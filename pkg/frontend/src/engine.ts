/** HTTP client for the engine bridge; one live session at a time. */

import { UiCommand, UiFrame } from "./protocol.js";

export class SessionLostError extends Error {}

export class EngineClient {
  constructor(private readonly baseUrl: string = "") {}

  private async post(path: string, body: unknown): Promise<UiFrame> {
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      throw new Error(`engine bridge returned ${response.status}`);
    }
    const frame = (await response.json()) as UiFrame;
    if (frame.error && frame.error.startsWith("SessionLost")) {
      throw new SessionLostError(frame.error);
    }
    return frame;
  }

  newSession(options: { scene?: string; demo?: string }): Promise<UiFrame> {
    return this.post("/session", options);
  }

  send(command: UiCommand): Promise<UiFrame> {
    return this.post("/command", command);
  }

  async demos(): Promise<string[]> {
    const response = await fetch(this.baseUrl + "/demos");
    return ((await response.json()) as { demos: string[] }).demos;
  }

  async sceneText(): Promise<string> {
    return (await fetch(this.baseUrl + "/scene")).text();
  }

  async traceText(): Promise<string> {
    return (await fetch(this.baseUrl + "/trace")).text();
  }

  async baselineText(): Promise<string> {
    return (await fetch(this.baseUrl + "/baseline")).text();
  }
}
