import init, { evaluate, convergence, crossing, thresholdTable } from "./pkg/wedge_demo.js";

const $ = (id) => document.getElementById(id);
const PARAMS = ["a1", "b1", "a2", "b2"];
const MAX_TERMS_SHOWN = 12;
const DOOB_COLOR = "#1f6fb2";
const THETA_COLOR = "#c2571a";

// sliders are on a log10 scale
const paramValue = (id) => 10 ** Number($(id).value);
const fmt = (x, digits = 4) => (Math.abs(x) >= 1e-3 || x === 0 ? x.toFixed(digits) : x.toExponential(digits - 1));

function clear(canvas) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  return ctx;
}

function drawWedge(a1, b1, a2, b2) {
  const canvas = $("wedge-canvas");
  const ctx = clear(canvas);
  const { width: w, height: h } = canvas;
  const horizon = 1;
  const span = Math.max(a1 * horizon + b1, a2 * horizon + b2) * 1.1;
  const y = (v) => h / 2 - (v / span) * (h / 2);
  const x = (t) => (t / horizon) * w;
  ctx.strokeStyle = "#c3cbd3";
  ctx.beginPath();
  ctx.moveTo(0, y(0));
  ctx.lineTo(w, y(0));
  ctx.stroke();
  ctx.fillStyle = "rgba(31,111,178,0.08)";
  ctx.beginPath();
  ctx.moveTo(x(0), y(b2));
  ctx.lineTo(x(horizon), y(a2 * horizon + b2));
  ctx.lineTo(x(horizon), y(-a1 * horizon - b1));
  ctx.lineTo(x(0), y(-b1));
  ctx.closePath();
  ctx.fill();
  ctx.strokeStyle = DOOB_COLOR;
  ctx.lineWidth = 2;
  for (const [start, end] of [[b2, a2 * horizon + b2], [-b1, -a1 * horizon - b1]]) {
    ctx.beginPath();
    ctx.moveTo(x(0), y(start));
    ctx.lineTo(x(horizon), y(end));
    ctx.stroke();
  }
  ctx.lineWidth = 1;
  ctx.fillStyle = "#5b6670";
  ctx.fillText("t = 0", 4, h - 6);
  ctx.fillText(`t = ${horizon}`, w - 34, h - 6);
}

function drawConvergence(profile) {
  const canvas = $("conv-canvas");
  const ctx = clear(canvas);
  const { width: w, height: h } = canvas;
  const pad = { left: 40, right: 10, top: 10, bottom: 26 };
  const lo = -20;
  const hi = 1;
  const x = (n) => pad.left + (n / MAX_TERMS_SHOWN) * (w - pad.left - pad.right);
  const y = (v) => pad.top + ((hi - Math.min(hi, v)) / (hi - lo)) * (h - pad.top - pad.bottom);
  ctx.strokeStyle = "#e3e8ed";
  ctx.fillStyle = "#5b6670";
  for (let v = lo; v <= 0; v += 4) {
    ctx.beginPath();
    ctx.moveTo(pad.left, y(v));
    ctx.lineTo(w - pad.right, y(v));
    ctx.stroke();
    ctx.fillText(String(v), 8, y(v) + 4);
  }
  for (let n = 0; n <= MAX_TERMS_SHOWN; n += 2) ctx.fillText(String(n), x(n) - 3, h - 8);
  ctx.strokeStyle = "#98a2ad";
  ctx.setLineDash([4, 4]);
  ctx.beginPath();
  ctx.moveTo(pad.left, y(-16));
  ctx.lineTo(w - pad.right, y(-16));
  ctx.stroke();
  ctx.setLineDash([]);
  for (const [series, color] of [[profile.doob, DOOB_COLOR], [profile.theta, THETA_COLOR]]) {
    ctx.strokeStyle = color;
    ctx.fillStyle = color;
    ctx.lineWidth = 2;
    ctx.beginPath();
    series.forEach((v, n) => (n === 0 ? ctx.moveTo(x(n), y(v)) : ctx.lineTo(x(n), y(v))));
    ctx.stroke();
    series.forEach((v, n) => ctx.fillRect(x(n) - 2, y(v) - 2, 4, 4));
  }
  ctx.lineWidth = 1;
}

function updateWedge() {
  for (const id of PARAMS) $(`${id}-out`).value = fmt(paramValue(id), 3);
  const terms = Number($("terms").value);
  $("terms-out").value = terms;
  const [a1, b1, a2, b2] = PARAMS.map(paramValue);
  try {
    const r = evaluate(a1, b1, a2, b2, terms);
    $("value").textContent = r.value.toPrecision(17);
    $("formula").textContent = r.terms > 0 ? `${r.formula}, ${r.terms} terms` : r.formula;
    $("abplus").textContent = `${fmt(r.ab_plus)} / ${fmt(r.tau)}`;
    $("bound").textContent = r.terms > 0 ? r.remainder_bound.toExponential(2) : "exact at double precision";
    $("eval-error").textContent = "";
    drawConvergence(convergence(a1, b1, a2, b2, MAX_TERMS_SHOWN));
  } catch (e) {
    $("eval-error").textContent = String(e.message ?? e);
  }
  drawWedge(a1, b1, a2, b2);
}

function knotInputs(containerId, values) {
  const container = $(containerId);
  return values.map((v) => {
    const input = document.createElement("input");
    input.type = "number";
    input.step = "0.1";
    input.value = v;
    input.addEventListener("input", drawBand);
    container.appendChild(input);
    return input;
  });
}

const upperKnots = knotInputs("upper-knots", [1, 1.2, 0.8, 1.1, 1]);
const lowerKnots = knotInputs("lower-knots", [-1, -0.9, -1.2, -1, -0.8]);
const knotValues = (inputs) => inputs.map((i) => Number(i.value));

function drawBand() {
  const canvas = $("band-canvas");
  const ctx = clear(canvas);
  const { width: w, height: h } = canvas;
  const upper = knotValues(upperKnots);
  const lower = knotValues(lowerKnots);
  const span = Math.max(...upper.map(Math.abs), ...lower.map(Math.abs)) * 1.15 || 1;
  const x = (i) => (i / (upper.length - 1)) * w;
  const y = (v) => h / 2 - (v / span) * (h / 2);
  ctx.strokeStyle = "#c3cbd3";
  ctx.beginPath();
  ctx.moveTo(0, y(0));
  ctx.lineTo(w, y(0));
  ctx.stroke();
  ctx.strokeStyle = THETA_COLOR;
  ctx.lineWidth = 2;
  for (const values of [upper, lower]) {
    ctx.beginPath();
    values.forEach((v, i) => (i === 0 ? ctx.moveTo(x(i), y(v)) : ctx.lineTo(x(i), y(v))));
    ctx.stroke();
  }
  ctx.lineWidth = 1;
}

function updateSamplesLabel() {
  $("samples-out").value = Math.round(10 ** Number($("samples").value)).toLocaleString();
}

function runCrossing() {
  const samples = Math.round(10 ** Number($("samples").value));
  const seed = BigInt(Math.max(0, Math.floor(Number($("seed").value) || 0)));
  const start = performance.now();
  try {
    const r = crossing(
      new Float64Array(knotValues(lowerKnots)),
      new Float64Array(knotValues(upperKnots)),
      1.0,
      samples,
      seed,
    );
    $("bcp-value").textContent = r.estimate.toFixed(6);
    $("bcp-se").textContent = r.std_error.toExponential(2);
    $("bcp-time").textContent = `${(performance.now() - start).toFixed(0)} ms`;
    $("bcp-error").textContent = "";
  } catch (e) {
    $("bcp-error").textContent = String(e.message ?? e);
  }
}

function fillThresholds() {
  const rows = thresholdTable();
  const body = $("thresholds").querySelector("tbody");
  for (let i = 0; i < rows.length; i += 3) {
    const tr = document.createElement("tr");
    const exponent = rows[i + 2];
    const e = Math.floor(exponent);
    const mantissa = 10 ** (exponent - e);
    for (const text of [String(rows[i]), rows[i + 1].toFixed(3), `${mantissa.toFixed(1)}e${e}`]) {
      const td = document.createElement("td");
      td.textContent = text;
      tr.appendChild(td);
    }
    body.appendChild(tr);
  }
}

await init();
for (const id of [...PARAMS, "terms"]) $(id).addEventListener("input", updateWedge);
$("samples").addEventListener("input", updateSamplesLabel);
$("run-bcp").addEventListener("click", runCrossing);
updateWedge();
updateSamplesLabel();
drawBand();
fillThresholds();
