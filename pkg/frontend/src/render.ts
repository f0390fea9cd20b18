/** Canvas painter for the engine's render list. */

import { DrawOp } from "./protocol.js";

const COVER_STROKE = "#d03030";

type Pt = [number, number];

function tracePolygon(ctx: CanvasRenderingContext2D, points: Pt[]): void {
  ctx.beginPath();
  points.forEach(([x, y], i) => (i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y)));
  ctx.closePath();
}

function paintOne(ctx: CanvasRenderingContext2D, op: DrawOp): void {
  switch (op.op) {
    case "rect": {
      const { x, y, w, h } = op as unknown as { x: number; y: number; w: number; h: number };
      if (op.fill !== "none") {
        ctx.fillStyle = String(op.fill);
        ctx.fillRect(x, y, w, h);
      }
      ctx.strokeStyle = String(op.stroke ?? "#333");
      ctx.strokeRect(x, y, w, h);
      break;
    }
    case "polygon": {
      tracePolygon(ctx, op.points as Pt[]);
      if (op.fill !== "none") {
        ctx.fillStyle = String(op.fill);
        ctx.fill();
      }
      ctx.strokeStyle = String(op.stroke ?? "#333");
      ctx.stroke();
      break;
    }
    case "annulus": {
      const { cx, cy } = op as unknown as { cx: number; cy: number };
      const rOuter = op.r_outer as number;
      const rInner = op.r_inner as number;
      ctx.beginPath();
      ctx.arc(cx, cy, rOuter, 0, 2 * Math.PI);
      ctx.arc(cx, cy, rInner, 0, 2 * Math.PI, true);
      if (op.fill !== "none") {
        ctx.fillStyle = String(op.fill);
        ctx.fill("evenodd");
      }
      ctx.strokeStyle = "#333";
      ctx.beginPath();
      ctx.arc(cx, cy, rOuter, 0, 2 * Math.PI);
      ctx.stroke();
      ctx.beginPath();
      ctx.arc(cx, cy, rInner, 0, 2 * Math.PI);
      ctx.stroke();
      break;
    }
    case "text": {
      const { x, y, angle, text } = op as unknown as {
        x: number; y: number; angle: number; text: string;
      };
      ctx.save();
      ctx.translate(x, y);
      ctx.rotate(angle);
      ctx.fillStyle = op.fill === "none" ? "#333" : String(op.fill);
      ctx.font = "12px sans-serif";
      ctx.textAlign = "center";
      ctx.textBaseline = "middle";
      ctx.fillText(text, 0, 0);
      ctx.restore();
      break;
    }
    case "node-circle": {
      const { cx, cy, r } = op as unknown as { cx: number; cy: number; r: number };
      ctx.save();
      if (op.transparent) ctx.setLineDash([3, 2]);
      ctx.strokeStyle = COVER_STROKE;
      ctx.beginPath();
      ctx.arc(cx, cy, r, 0, 2 * Math.PI);
      ctx.stroke();
      ctx.restore();
      break;
    }
    case "node-polygon": {
      ctx.save();
      if (op.transparent) ctx.setLineDash([3, 2]);
      ctx.strokeStyle = COVER_STROKE;
      tracePolygon(ctx, op.points as Pt[]);
      ctx.stroke();
      ctx.restore();
      break;
    }
    case "node-capsule": {
      const p1 = op.p1 as Pt;
      const p2 = op.p2 as Pt;
      const r = op.r as number;
      const dx = p2[0] - p1[0];
      const dy = p2[1] - p1[1];
      const len = Math.hypot(dx, dy);
      ctx.save();
      if (op.transparent) ctx.setLineDash([3, 2]);
      ctx.strokeStyle = COVER_STROKE;
      ctx.beginPath();
      if (len === 0) {
        ctx.arc(p1[0], p1[1], r, 0, 2 * Math.PI);
      } else {
        const heading = Math.atan2(dy, dx);
        ctx.arc(p1[0], p1[1], r, heading + Math.PI / 2, heading - Math.PI / 2);
        ctx.arc(p2[0], p2[1], r, heading - Math.PI / 2, heading + Math.PI / 2);
        ctx.closePath();
      }
      ctx.stroke();
      ctx.restore();
      break;
    }
    default:
      break;
  }
}

export function paintFrame(ctx: CanvasRenderingContext2D, shapes: DrawOp[],
                           width: number, height: number): void {
  ctx.clearRect(0, 0, width, height);
  ctx.lineWidth = 1;
  for (const op of shapes) {
    paintOne(ctx, op);
  }
}
