import init, { eigenvalue_table, characteristic_roots, decompose } from "./pkg/supercasimir_wasm.js";

const $ = (id) => document.getElementById(id);

function table(headers, rows) {
  const t = document.createElement("table");
  const head = t.insertRow();
  for (const h of headers) {
    const th = document.createElement("th");
    th.textContent = h;
    head.appendChild(th);
  }
  for (const row of rows) {
    const tr = t.insertRow();
    for (const cell of row) tr.insertCell().textContent = cell ?? "n/a";
  }
  return t;
}

function show(target, json, render) {
  const out = $(target);
  out.replaceChildren();
  const data = JSON.parse(json);
  if (data.error) {
    out.innerHTML = `<p class="error"></p>`;
    out.firstChild.textContent = data.error;
    return;
  }
  render(out, data);
}

function eigenvalues() {
  const json = eigenvalue_table($("eig-weight").value, Number($("eig-q").value));
  show("eig-out", json, (out, data) => {
    const rows = data.rows.map((r) => [r.q, r.formula + (r.regularized ? " *" : ""), r.module]);
    out.appendChild(table(["q", "closed form", "explicit module"], rows));
    if (data.rows.some((r) => r.regularized)) {
      const note = document.createElement("p");
      note.textContent = "* colliding roots, evaluated as a limit";
      out.appendChild(note);
    }
  });
}

function roots() {
  show("roots-out", characteristic_roots($("roots-weight").value), (out, data) => {
    out.appendChild(table(["i", "alpha_i"], data.roots.map((r) => [r.index, r.alpha])));
    const p = document.createElement("p");
    if (data.identity === null) {
      p.textContent = "module too large (or not realizable) to check the identity";
    } else if (data.identity.passed) {
      p.className = "ok";
      p.textContent = `product of (A - alpha_i) vanishes on a ${data.identity.dim}-dimensional space`;
    } else {
      p.className = "error";
      p.textContent = `identity fails (multiplicity ${data.identity.multiplicity}): ${data.identity.witness}`;
    }
    out.appendChild(p);
  });
}

function decomposition() {
  const json = decompose(Number($("dec-m").value), Number($("dec-n").value), Number($("dec-p").value));
  show("dec-out", json, (out, data) => {
    const p = document.createElement("p");
    p.textContent = `${data.algebra}: tensor power of dimension ${data.dim}`;
    out.appendChild(p);
    const rows = data.modules.map((x) => [x.weight, x.dim, x.dominant ? "" : "not dominant"]);
    out.appendChild(table(["highest weight", "cyclic dim", ""], rows));
  });
}

await init();
$("eig-go").onclick = eigenvalues;
$("roots-go").onclick = roots;
$("dec-go").onclick = decomposition;
eigenvalues();
roots();
decomposition();
