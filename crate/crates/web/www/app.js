import init, { bratteliJson, seriesJson, diagramsJson } from "./pkg/cubewalk_web.js";

const el = (tag, attrs = {}, ...children) => {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  for (const c of children) node.append(c);
  return node;
};

const svg = (tag, attrs = {}) => {
  const node = document.createElementNS("http://www.w3.org/2000/svg", tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
};

function panel(id, render) {
  const section = document.getElementById(id);
  const form = section.querySelector("form");
  const out = section.querySelector(".out");
  const go = (event) => {
    event?.preventDefault();
    out.replaceChildren();
    try {
      render(new FormData(form), form, out);
    } catch (err) {
      out.append(el("p", { class: "error" }, String(err)));
    }
  };
  form.addEventListener("submit", go);
  go();
}

function drawBratteli(data, form, out) {
  const result = JSON.parse(bratteliJson(Number(data.get("n")), Number(data.get("k"))));
  for (const level of result.levels) {
    const row = el("div", { class: "level" }, el("span", { class: "k" }, `k=${level.level}`));
    for (const v of level.vertices) {
      row.append(el("span", {}, `(${v.vertex})`, el("sub", {}, v.multiplicity)));
    }
    row.append(el("span", { class: "sum" }, level.sum_of_squares));
    out.append(row);
  }
}

function drawSeries(data, form, out) {
  const r = JSON.parse(seriesJson(Number(data.get("n")), String(data.get("a")), Number(data.get("k"))));
  out.append(el("p", {}, `m^(${r.a})(t) = ${r.reduced_text}`));
  const table = el("table");
  const header = el("tr", {}, el("th", {}, "k"));
  r.poincare.forEach((_, k) => header.append(el("th", {}, String(k))));
  table.append(header);
  for (const [name, values] of [["Poincare", r.poincare], ["EGF", r.egf], ["closed form", r.closed]]) {
    const row = el("tr", {}, el("th", {}, name));
    values.forEach((v) => row.append(el("td", {}, v)));
    table.append(row);
  }
  out.append(table);
  out.append(el("p", { class: r.agree ? "ok" : "bad" }, r.agree ? "all three routes agree" : "routes disagree"));
}

function diagramSvg(d, k) {
  const gap = 28;
  const width = gap * (k + 1);
  const pic = svg("svg", { width, height: 70, viewBox: `0 0 ${width} 70` });
  const pos = (node) => (node <= k ? [gap * node, 55] : [gap * (node - k), 15]);
  for (const block of d.blocks) {
    for (let i = 1; i < block.length; i++) {
      const [x1, y1] = pos(block[i - 1]);
      const [x2, y2] = pos(block[i]);
      pic.append(svg("line", { x1, y1, x2, y2 }));
    }
  }
  for (let node = 1; node <= 2 * k; node++) {
    const [cx, cy] = pos(node);
    pic.append(svg("circle", { cx, cy, r: 4 }));
  }
  return pic;
}

function drawDiagrams(data, form, out) {
  const k = Number(data.get("k"));
  const r = JSON.parse(diagramsJson(k, Number(data.get("n")), form.elements.even.checked));
  out.append(el("p", {}, `${r.diagrams.length} diagrams, ${r.total_summands} summands in total`));
  r.diagrams.forEach((d, i) => {
    const terms = d.summands.length ? d.summands.join(" + ") : "0";
    out.append(el("div", { class: "diagram" }, el("div", {}, `d${i + 1}: ${d.rgs}`), diagramSvg(d, k),
      el("div", { class: "summands" }, `T_d = ${terms}`)));
  });
}

await init();
panel("bratteli", drawBratteli);
panel("series", drawSeries);
panel("diagrams", drawDiagrams);
