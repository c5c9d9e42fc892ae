import init, { dimensionReport, defectGrid, recoverOverlap } from "./pkg/grassdim_web.js";

const ints = (form, names) => names.map((name) => Number(form.elements[name].value));

function run(out, f) {
  try {
    out.classList.remove("err");
    return f();
  } catch (e) {
    out.classList.add("err");
    out.textContent = String(e);
  }
}

function showDimension(event) {
  event.preventDefault();
  const out = document.getElementById("dim-out");
  run(out, () => {
    const [n, k, s, r, seed] = ints(event.target, ["n", "k", "s", "r", "seed"]);
    const v = JSON.parse(dimensionReport(n, k, s, r, seed));
    out.textContent = [
      `σ_${s}^${r}(Gr(${k},${n})) in P^${binomial(n, k) - 1}`,
      `oracle dimension   ${v.report.proj_dim}  (ranks ${v.report.ranks.join(", ")})`,
      `expected           ${v.defect.expected}`,
      `fiber prediction   ${v.defect.fiber}${v.prediction.assumes_bddg ? "  (assumes the defect table is complete)" : ""}`,
      `defect             ${v.defect.defect}`,
      `forced overlap     ${v.prediction.forced_overlap}`,
    ].join("\n");
  });
}

function binomial(n, k) {
  let c = 1;
  for (let i = 0; i < k; i++) c = (c * (n - i)) / (i + 1);
  return Math.round(c);
}

function showGrid(event) {
  event.preventDefault();
  const out = document.getElementById("grid-out");
  run(out, () => {
    const [s, r, nmax] = ints(event.target, ["s", "r", "nmax"]);
    const g = JSON.parse(defectGrid(s, r, nmax, 0));
    const cells = new Map(g.cells.map((c) => [`${c.n},${c.k}`, c]));
    const skipped = new Set(g.skipped.map(([n, k]) => `${n},${k}`));
    const table = document.createElement("table");
    table.className = "grid";
    const head = table.insertRow();
    head.insertCell().textContent = "n \\ k";
    for (let k = 1; k < nmax; k++) head.insertCell().textContent = k;
    for (let n = 2; n <= nmax; n++) {
      const row = table.insertRow();
      row.insertCell().textContent = n;
      for (let k = 1; k < nmax; k++) {
        const td = row.insertCell();
        const key = `${n},${k}`;
        const c = cells.get(key);
        if (c) {
          td.textContent = c.proj;
          td.className = c.defect > 0 ? "defect" : "ok";
          td.title = `expected ${c.expected}, fiber ${c.fiber}, defect ${c.defect}`;
        } else if (skipped.has(key)) {
          td.textContent = "…";
          td.className = "skip";
          td.title = "too large for the browser";
        }
      }
    }
    out.replaceChildren(table);
  });
}

function showRecovery(event) {
  event.preventDefault();
  const out = document.getElementById("rec-out");
  run(out, () => {
    const form = event.target;
    const [n, r] = ints(form, ["n", "r"]);
    const v = JSON.parse(recoverOverlap(n, form.elements.expr.value, r));
    const fiber = v.fiber.map(([idx, c]) => `${c}·e${idx.join("")}`).join(" + ") || "0";
    out.textContent = [
      `E (${v.overlap.length}-dimensional, rows):`,
      ...v.overlap.map((row) => "  [" + row.join(", ") + "]"),
      `fiber t in Λ^${v.k - v.r} of the quotient: ${fiber}`,
      `re-embedded = ${v.scalar ?? "not proportional"} × input`,
    ].join("\n");
  });
}

await init();
document.getElementById("dim-form").addEventListener("submit", showDimension);
document.getElementById("grid-form").addEventListener("submit", showGrid);
document.getElementById("rec-form").addEventListener("submit", showRecovery);
