import init, { verify_identity, gauss_walk, search } from "./pkg/cyclotrig_web.js";

const $ = (id) => document.getElementById(id);

function runVerify() {
  const out = $("verify-out");
  const r = JSON.parse(verify_identity($("identity").value));
  if (r.error) {
    out.textContent = r.error;
    return;
  }
  out.innerHTML = "";
  const verdict = document.createElement("span");
  verdict.className = r.holds ? "holds" : "fails";
  verdict.textContent = r.holds ? "HOLDS" : "FAILS";
  out.append(
    verdict,
    `  ${r.lhs} = ${r.rhs}\n`,
    `field order L = ${r.field_order}\n`,
    `residual is zero: ${r.residual_zero}\n`,
    `lhs ~ ${r.lhs_value.toPrecision(15)}, rhs ~ ${r.rhs_value.toPrecision(15)} (floating point, for reference)`,
  );
}

function drawWalk(walk) {
  const canvas = $("plot");
  const ctx = canvas.getContext("2d");
  const w = canvas.width;
  const h = canvas.height;
  ctx.clearRect(0, 0, w, h);

  const pts = walk.points;
  let extent = 1;
  for (const [x, y] of pts.concat([walk.closed])) {
    extent = Math.max(extent, Math.abs(x), Math.abs(y));
  }
  const scale = (0.45 * Math.min(w, h)) / extent;
  const px = (x) => w / 2 + x * scale;
  const py = (y) => h / 2 - y * scale;

  ctx.strokeStyle = "#ccc";
  ctx.beginPath();
  ctx.moveTo(0, h / 2);
  ctx.lineTo(w, h / 2);
  ctx.moveTo(w / 2, 0);
  ctx.lineTo(w / 2, h);
  ctx.stroke();

  ctx.strokeStyle = "#2a5db0";
  ctx.lineWidth = 1.2;
  ctx.beginPath();
  ctx.moveTo(px(pts[0][0]), py(pts[0][1]));
  for (const [x, y] of pts.slice(1)) ctx.lineTo(px(x), py(y));
  ctx.stroke();

  ctx.fillStyle = "#c0392b";
  ctx.beginPath();
  ctx.arc(px(walk.closed[0]), py(walk.closed[1]), 5, 0, 2 * Math.PI);
  ctx.fill();
}

function runGauss() {
  const walk = JSON.parse(gauss_walk(Number($("gauss-n").value)));
  if (walk.error) {
    $("gauss-out").textContent = walk.error;
    return;
  }
  drawWalk(walk);
  const [re, im] = walk.closed;
  $("gauss-out").textContent =
    `G_${walk.n} = ${walk.class} = ${re.toFixed(6)} + ${im.toFixed(6)}i\n` +
    `exact sum equals closed form: ${walk.matches}`;
}

function runSearch() {
  const out = $("search-out");
  out.textContent = "searching...";
  // Let the message paint before the synchronous search blocks the thread.
  setTimeout(() => {
    const r = JSON.parse(search($("search-n").value, $("search-m").value, Number($("search-k").value)));
    if (r.error) {
      out.textContent = r.error;
      return;
    }
    const lines = r.found.length ? r.found : ["(nothing found)"];
    out.textContent =
      lines.join("\n") + `\n\n${r.candidates} candidates, ${r.prefilter_pass} passed the numeric prefilter`;
  }, 10);
}

await init();
$("verify").onclick = runVerify;
$("gauss").onclick = runGauss;
$("search").onclick = runSearch;
$("identity").addEventListener("keydown", (e) => e.key === "Enter" && runVerify());
runVerify();
runGauss();
