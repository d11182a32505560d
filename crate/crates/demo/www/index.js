import init, { paretoSweep, atspTour, mmvcCover } from "./pkg/tradeoff_demo.js";

const field = (section, name) => section.querySelector(`[name=${name}]`).value;
const num = (section, name) => Number(field(section, name));
const seed = (section) => BigInt(Math.max(0, Math.floor(num(section, "seed"))));

function report(section, text, isError = false) {
  const pre = section.querySelector("pre");
  pre.textContent = text;
  pre.className = isError ? "err" : "";
}

function wire(id, action) {
  const section = document.getElementById(id);
  const go = () => {
    try {
      action(section);
    } catch (e) {
      report(section, String(e.message ?? e), true);
    }
  };
  section.querySelector("button").addEventListener("click", go);
  go();
}

function circleLayout(n, size) {
  const c = size / 2, rad = size / 2 - 20;
  return Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / n - Math.PI / 2;
    return [c + rad * Math.cos(a), c + rad * Math.sin(a)];
  });
}

function drawGraph(ctx, pos, edges, edgeStyle, nodeStyle) {
  for (const [u, v] of edges) {
    ctx.strokeStyle = edgeStyle(u, v);
    ctx.beginPath();
    ctx.moveTo(...pos[u]);
    ctx.lineTo(...pos[v]);
    ctx.stroke();
  }
  pos.forEach(([x, y], v) => {
    ctx.fillStyle = nodeStyle(v);
    ctx.beginPath();
    ctx.arc(x, y, 6, 0, 2 * Math.PI);
    ctx.fill();
  });
}

function arrow(ctx, [x1, y1], [x2, y2]) {
  const a = Math.atan2(y2 - y1, x2 - x1);
  const ex = x2 - 7 * Math.cos(a), ey = y2 - 7 * Math.sin(a);
  ctx.beginPath();
  ctx.moveTo(x1, y1);
  ctx.lineTo(ex, ey);
  ctx.stroke();
  ctx.beginPath();
  ctx.moveTo(ex, ey);
  ctx.lineTo(ex - 8 * Math.cos(a - 0.4), ey - 8 * Math.sin(a - 0.4));
  ctx.lineTo(ex - 8 * Math.cos(a + 0.4), ey - 8 * Math.sin(a + 0.4));
  ctx.closePath();
  ctx.fill();
}

function pareto(section) {
  const view = JSON.parse(paretoSweep(field(section, "problem"), num(section, "n"), num(section, "p"), seed(section)));
  const canvas = section.querySelector("canvas");
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  const pad = 40;
  ctx.clearRect(0, 0, w, h);
  const maxLog = Math.log10(Math.max(...view.points.map((p) => p.nodes)));
  const maxR = view.points[view.points.length - 1].r;
  const x = (r) => pad + ((w - 2 * pad) * (r - 1)) / Math.max(maxR - 1, 1e-9);
  const y = (nodes) => h - pad - ((h - 2 * pad) * Math.log10(nodes)) / Math.max(maxLog, 1e-9);
  ctx.strokeStyle = "#999";
  ctx.strokeRect(pad, pad, w - 2 * pad, h - 2 * pad);
  ctx.fillStyle = "#444";
  ctx.fillText("r", w / 2, h - 10);
  ctx.fillText("log10 subsets", 4, pad - 10);
  ctx.strokeStyle = "#2a6fdb";
  ctx.beginPath();
  view.points.forEach((p, i) => (i ? ctx.lineTo(x(p.r), y(p.nodes)) : ctx.moveTo(x(p.r), y(p.nodes))));
  ctx.stroke();
  for (const p of view.points) {
    ctx.fillStyle = p.value === view.opt ? "#2a6fdb" : "#e07b00";
    ctx.beginPath();
    ctx.arc(x(p.r), y(p.nodes), 4, 0, 2 * Math.PI);
    ctx.fill();
  }
  const rows = view.points.map(
    (p) => `${p.r.toFixed(2).padStart(6)} ${String(p.nodes).padStart(8)} ${String(p.value).padStart(5)}  ${p.guarantee.toFixed(2)}`,
  );
  report(section, [`optimum ${view.opt} (blue points reach it)`, "     r  subsets value  certified", ...rows].join("\n"));
}

function atsp(section) {
  const view = JSON.parse(atspTour(num(section, "n"), num(section, "r"), seed(section)));
  const canvas = section.querySelector("canvas");
  const ctx = canvas.getContext("2d");
  const s = canvas.width;
  ctx.clearRect(0, 0, s, s);
  const pos = view.points.map(([px, py]) => [20 + px * (s - 40), 20 + py * (s - 40)]);
  ctx.strokeStyle = ctx.fillStyle = "rgba(224,123,0,0.45)";
  ctx.lineWidth = 4;
  for (const circuit of view.cycle_cover) {
    circuit.forEach((c, i) => arrow(ctx, pos[c], pos[circuit[(i + 1) % circuit.length]]));
  }
  ctx.strokeStyle = ctx.fillStyle = "#2a6fdb";
  ctx.lineWidth = 1.5;
  view.tour.forEach((c, i) => arrow(ctx, pos[c], pos[view.tour[(i + 1) % view.tour.length]]));
  ctx.fillStyle = "#222";
  pos.forEach(([px, py], i) => ctx.fillText(String(i), px + 6, py - 6));
  const opt = view.optimal_cost;
  report(
    section,
    [
      `cycle cover (orange): ${view.cycle_cover.length} circuits, cost ${view.cycle_cover_cost}`,
      `tour (blue): cost ${view.tour_cost}, certified within ${view.guarantee}x`,
      opt == null ? "optimum: too many cities to compute here" : `optimum: ${opt} (ratio ${(view.tour_cost / opt).toFixed(3)})`,
      "moving up the page costs 50% extra",
    ].join("\n"),
  );
}

function mmvc(section) {
  const view = JSON.parse(mmvcCover(num(section, "n"), num(section, "p"), num(section, "rho"), seed(section)));
  const canvas = section.querySelector("canvas");
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const pos = circleLayout(view.graph.n, canvas.width);
  const matched = new Set(view.matching.map(([u, v]) => `${u},${v}`));
  const cover = new Set(view.cover);
  ctx.lineWidth = 1.5;
  drawGraph(
    ctx,
    pos,
    view.graph.edges,
    (u, v) => (matched.has(`${u},${v}`) || matched.has(`${v},${u}`) ? "#e07b00" : "#bbb"),
    (v) => (cover.has(v) ? "#2a6fdb" : "#ddd"),
  );
  report(
    section,
    [
      `cover (blue): ${view.cover.length} vertices`,
      `optimum: ${view.opt ?? "not computed above 30 vertices"}`,
      `rho used: ${view.rho}, subsets enumerated: ${view.nodes}`,
      `maximal matching (orange): ${view.matching.length} edges`,
    ].join("\n"),
  );
}

await init();
wire("pareto", pareto);
wire("atsp", atsp);
wire("mmvc", mmvc);
