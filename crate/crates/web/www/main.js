import init, { analyze, decompose, extremal } from "./pkg/szlab_web.js";

const SVG = "http://www.w3.org/2000/svg";
const $ = (id) => document.getElementById(id);

let current = null; // { n, edges, positions, pairs }
let picked = [];

function el(tag, attrs, parent) {
  const node = document.createElementNS(SVG, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (parent) parent.appendChild(node);
  return node;
}

// Spring layout from a circle start; deterministic for a given graph.
function layout(n, edges, size) {
  const pos = [];
  for (let i = 0; i < n; i++) {
    const a = (2 * Math.PI * i) / n;
    pos.push([Math.cos(a), Math.sin(a)]);
  }
  const k = 1.6 / Math.sqrt(Math.max(n, 1));
  for (let step = 0; step < 300; step++) {
    const t = 0.1 * (1 - step / 300);
    const disp = pos.map(() => [0, 0]);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = pos[i][0] - pos[j][0], dy = pos[i][1] - pos[j][1];
        const d2 = Math.max(dx * dx + dy * dy, 1e-4);
        const f = (k * k) / d2;
        disp[i][0] += dx * f; disp[i][1] += dy * f;
        disp[j][0] -= dx * f; disp[j][1] -= dy * f;
      }
    }
    for (const [u, v] of edges) {
      const dx = pos[u][0] - pos[v][0], dy = pos[u][1] - pos[v][1];
      const d = Math.max(Math.hypot(dx, dy), 1e-3);
      const f = d / k;
      disp[u][0] -= dx * f; disp[u][1] -= dy * f;
      disp[v][0] += dx * f; disp[v][1] += dy * f;
    }
    for (let i = 0; i < n; i++) {
      const d = Math.max(Math.hypot(disp[i][0], disp[i][1]), 1e-9);
      pos[i][0] += (disp[i][0] / d) * Math.min(d, t);
      pos[i][1] += (disp[i][1] / d) * Math.min(d, t);
    }
  }
  const xs = pos.map((p) => p[0]), ys = pos.map((p) => p[1]);
  const [x0, x1, y0, y1] = [Math.min(...xs), Math.max(...xs), Math.min(...ys), Math.max(...ys)];
  const pad = 24, span = Math.max(x1 - x0, y1 - y0, 1e-6);
  return pos.map(([x, y]) => [pad + ((x - x0) / span) * (size - 2 * pad), pad + ((y - y0) / span) * (size - 2 * pad)]);
}

function draw(svg, n, edges, opts = {}) {
  svg.replaceChildren();
  const size = Number(svg.getAttribute("width"));
  const pos = opts.positions || layout(n, edges, size);
  const cycle = new Set();
  const c = opts.cycle || [];
  for (let i = 0; i < c.length; i++) {
    const a = c[i], b = c[(i + 1) % c.length];
    cycle.add(`${Math.min(a, b)}-${Math.max(a, b)}`);
  }
  edges.forEach(([u, v], i) => {
    const cls = cycle.has(`${Math.min(u, v)}-${Math.max(u, v)}`) ? "edge cycle" : "edge";
    el("line", { x1: pos[u][0], y1: pos[u][1], x2: pos[v][0], y2: pos[v][1], class: cls }, svg);
    if (opts.edgeLabels) {
      const t = el("text", { x: (pos[u][0] + pos[v][0]) / 2 + 4, y: (pos[u][1] + pos[v][1]) / 2 - 4, class: "elabel" }, svg);
      t.textContent = opts.edgeLabels[i];
    }
  });
  const r = opts.radius || 11;
  for (let v = 0; v < n; v++) {
    let cls = "vertex";
    if (opts.cut && opts.cut.includes(v)) cls += " cut";
    if (picked.includes(v) && opts.interactive) cls += " picked";
    const dot = el("circle", { cx: pos[v][0], cy: pos[v][1], r, class: cls }, svg);
    if (opts.interactive) {
      dot.style.cursor = "pointer";
      dot.addEventListener("click", () => pick(v));
    }
    if (r >= 8) {
      const t = el("text", { x: pos[v][0], y: pos[v][1], class: "label" }, svg);
      t.textContent = v;
    }
  }
  return pos;
}

function table(rows, head) {
  const t = document.createElement("table");
  if (head) {
    const tr = t.insertRow();
    for (const h of head) {
      const th = document.createElement("th");
      th.textContent = h;
      tr.appendChild(th);
    }
  }
  for (const row of rows) {
    const tr = t.insertRow();
    for (const cell of row) {
      const td = tr.insertCell();
      if (cell instanceof Node) td.appendChild(cell);
      else td.textContent = cell;
    }
  }
  return t;
}

function status(ok) {
  const s = document.createElement("span");
  s.className = ok ? "ok" : "fail";
  s.textContent = ok ? "holds" : "fails";
  return s;
}

function run(fn) {
  $("error").textContent = "";
  try {
    fn();
  } catch (e) {
    $("error").textContent = String(e);
  }
}

function showAnalysis() {
  const a = JSON.parse(analyze($("input").value));
  const edges = a.edges.map((e) => [e.u, e.v]);
  picked = [];
  const positions = draw($("canvas"), a.n, edges, {
    cycle: a.girth_cycle,
    cut: a.cut_vertices,
    edgeLabels: a.edges.map((e) => `${e.n_u}·${e.n_v}`),
  });
  current = { n: a.n, edges, positions, pairs: null };
  const report = $("report");
  report.replaceChildren();
  const rows = [
    ["graph6", a.graph6],
    ["n, m", `${a.n}, ${a.m}`],
    ["bipartite", a.bipartite ? "yes" : "no"],
    ["W", a.wiener],
    ["Sz", a.szeged],
    ["Sz*", a.revised_szeged],
    ["Sz − W", a.gap],
  ];
  if (a.bound !== null) rows.push(["4n − 8", a.bound], ["bound", status(a.gap >= a.bound)]);
  rows.push(["girth cycle", a.girth_cycle.join("-") || "none"], ["cut vertices", a.cut_vertices.join(", ") || "none"]);
  report.appendChild(table(rows));
  report.appendChild(table(a.edges.map((e) => [`${e.u}-${e.v}`, e.n_u, e.n_v, e.n_0]), ["edge", "n_u", "n_v", "n_0"]));
}

function showDecomposition() {
  const d = JSON.parse(decompose($("input").value));
  picked = [];
  const positions = draw($("canvas"), d.n, d.edges, { interactive: true });
  current = { n: d.n, edges: d.edges, positions, pairs: d.pairs };
  const report = $("report");
  report.replaceChildren();
  report.appendChild(
    table(
      d.blocks.map((b, i) => {
        const cross = i === d.designated_block ? "designated" : d.cross_with_b1[i < d.designated_block ? i : i - 1];
        return [i, b.join(" "), d.within_block[i], cross];
      }),
      ["block", "vertices", "within", "cross with designated"],
    ),
  );
  report.appendChild(
    table(
      [
        ["cross other", d.cross_other],
        ["total = Sz − W", d.total],
        ["4n − 8", d.bound],
      ],
    ),
  );
  report.appendChild(
    table(
      d.checks.map((c) => [c.name + (c.block === null ? "" : ` (block ${c.block})`), c.value, c.bound, status(c.holds)]),
      ["check", "value", "bound", ""],
    ),
  );
  const hint = document.createElement("p");
  hint.id = "pair";
  hint.textContent = "Click two vertices to see their pair surplus.";
  report.appendChild(hint);
}

function pick(v) {
  if (!current || !current.pairs) return;
  picked = picked.length === 1 && picked[0] !== v ? [picked[0], v] : [v];
  draw($("canvas"), current.n, current.edges, { positions: current.positions, interactive: true });
  if (picked.length === 2) {
    const [x, y] = [Math.min(...picked), Math.max(...picked)];
    const p = current.pairs.find((q) => q.x === x && q.y === y);
    const where = p.block === null ? p.category : `${p.category}, block ${p.block}`;
    $("pair").textContent = `pair ${x}-${y}: surplus ${p.surplus} (${where})`;
  }
}

function showFamily() {
  const f = JSON.parse(extremal(Number($("extremal-n").value)));
  const box = $("family");
  box.replaceChildren();
  const caption = document.createElement("p");
  caption.textContent = `${f.members.length} members on ${f.n} vertices, each with Sz − W = ${f.bound}`;
  box.appendChild(caption);
  const gallery = document.createElement("div");
  gallery.className = "gallery";
  for (const m of f.members) {
    const fig = document.createElement("figure");
    const svg = el("svg", { width: 120, height: 120, viewBox: "0 0 120 120" }, fig);
    draw(svg, f.n, m.edges, { radius: 5, cycle: [0, 1, 2, 3] });
    const cap = document.createElement("figcaption");
    cap.textContent = `${m.graph6} gap ${m.gap}`;
    fig.appendChild(cap);
    fig.style.cursor = "pointer";
    fig.addEventListener("click", () => {
      $("input").value = m.graph6;
      run(showAnalysis);
    });
    gallery.appendChild(fig);
  }
  box.appendChild(gallery);
}

await init();
$("analyze").addEventListener("click", () => run(showAnalysis));
$("decompose").addEventListener("click", () => run(showDecomposition));
$("extremal").addEventListener("click", () => run(showFamily));
$("preset").addEventListener("change", (e) => {
  if (!e.target.value) return;
  $("input").value = e.target.value.replaceAll(";", "\n");
  run(showAnalysis);
});
run(showAnalysis);
