import init, { construct, verify, search } from "./pkg/ramseylab_demo.js";

const $ = (id) => document.getElementById(id);
const canvas = $("view");
const ctx = canvas.getContext("2d");

let current = null;   // coloring JSON from the module
let witness = null;   // list of triples to outline
let hidden = new Set();

// catalog certificates as extra construct options
const CERTS = ["kite_k6_n7", "bow_k6_n6", "bow_k3_n5", "k43e_k2_n6", "f5_k3_n6", "bow_k7_n8"];
for (const name of CERTS) {
  const opt = document.createElement("option");
  opt.value = name;
  opt.textContent = `certificate ${name}`;
  $("kind").append(opt);
}

function hue(c, k) {
  return `hsl(${Math.round((360 * c) / Math.max(k, 1))}, 70%, 50%)`;
}

function points(n) {
  const cx = canvas.width / 2, cy = canvas.height / 2, rad = canvas.width / 2 - 30;
  return Array.from({ length: n }, (_, i) => {
    const t = -Math.PI / 2 + (2 * Math.PI * i) / n;
    return [cx + rad * Math.cos(t), cy + rad * Math.sin(t)];
  });
}

function triangle(p, v) {
  ctx.beginPath();
  ctx.moveTo(...p[v[0]]);
  ctx.lineTo(...p[v[1]]);
  ctx.lineTo(...p[v[2]]);
  ctx.closePath();
}

function draw() {
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!current) return;
  const p = points(current.n);
  ctx.globalAlpha = 0.18;
  for (const e of current.edges) {
    if (hidden.has(e.c)) continue;
    triangle(p, e.v);
    ctx.fillStyle = hue(e.c, current.k);
    ctx.fill();
  }
  ctx.globalAlpha = 1;
  if (witness) {
    ctx.lineWidth = 3;
    ctx.strokeStyle = "#000";
    for (const v of witness) {
      triangle(p, v);
      ctx.stroke();
    }
  }
  ctx.fillStyle = "#222";
  ctx.font = "12px system-ui";
  p.forEach(([x, y], i) => {
    ctx.beginPath();
    ctx.arc(x, y, 4, 0, 2 * Math.PI);
    ctx.fill();
    ctx.fillText(String(i), x + 6, y - 6);
  });
}

function legend() {
  const el = $("legend");
  el.replaceChildren();
  if (!current) return;
  current.class_sizes.forEach((size, c) => {
    const s = document.createElement("span");
    s.innerHTML = `<i style="background:${hue(c, current.k)}"></i>color ${c} (${size})`;
    s.className = hidden.has(c) ? "off" : "";
    s.onclick = () => {
      hidden.has(c) ? hidden.delete(c) : hidden.add(c);
      legend();
      draw();
    };
    el.append(s);
  });
}

function show(coloring, text) {
  current = coloring;
  witness = null;
  hidden = new Set();
  legend();
  draw();
  $("out").textContent = text;
}

function call(f, ...args) {
  const res = JSON.parse(f(...args));
  if (res.error) {
    $("out").textContent = `error: ${res.error}`;
    return null;
  }
  return res;
}

$("construct").onclick = () => {
  const res = call(construct, $("kind").value, Number($("a").value), Number($("b").value));
  if (res) show(res, `${res.claim}\nn = ${res.n}, k = ${res.k}, class sizes ${res.class_sizes.join(",")}`);
};

$("verify").onclick = () => {
  if (!current) return;
  const res = call(verify, $("pattern").value, current.hrc);
  if (!res) return;
  if (res.clean) {
    witness = null;
    $("out").textContent = `no monochromatic ${$("pattern").value}`;
  } else {
    witness = res.witness.edges;
    const edges = witness.map((e) => `{${e.join(" ")}}`).join(" ");
    $("out").textContent = `monochromatic ${$("pattern").value} in color ${res.witness.color}: ${edges}`;
  }
  draw();
};

$("search").onclick = () => {
  const pat = $("spattern").value, k = Number($("sk").value), n = Number($("sn").value);
  $("out").textContent = "searching…";
  // let the status paint before the synchronous search starts
  setTimeout(() => {
    const res = call(search, pat, k, n, Number($("sbudget").value));
    if (!res) return;
    const name = res.pattern;
    if (res.status === "found") {
      show(res.coloring, `found a ${k}-coloring of K_${n} with no monochromatic ${name}: r_${k}(${name}) > ${n}\n${res.nodes} nodes`);
    } else if (res.status === "not-found") {
      $("out").textContent = `every ${k}-coloring of K_${n} has a monochromatic ${name}: r_${k}(${name}) ≤ ${n}\n${res.nodes} nodes`;
    } else {
      $("out").textContent = `budget exceeded after ${res.nodes} nodes`;
    }
  }, 10);
};

await init();
$("construct").click();
