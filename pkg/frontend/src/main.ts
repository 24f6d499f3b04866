import { ApiClient } from "./api";
import { ViewState } from "./state";
import { formatVariable, quiverFromSeed } from "./quiver";

const SVG_NS = "http://www.w3.org/2000/svg";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text = "",
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text) node.textContent = text;
  return node;
}

function renderQuiver(state: ViewState, mount: HTMLElement): void {
  mount.textContent = "";
  if (!state.seed) return;
  const model = quiverFromSeed(state.seed);
  const svg = document.createElementNS(SVG_NS, "svg");
  const width = Math.max(...model.vertices.map((v) => v.x)) + 80;
  svg.setAttribute("width", String(width));
  svg.setAttribute("height", "260");
  const marker = document.createElementNS(SVG_NS, "marker");
  marker.setAttribute("id", "arrowhead");
  marker.setAttribute("markerWidth", "8");
  marker.setAttribute("markerHeight", "8");
  marker.setAttribute("refX", "7");
  marker.setAttribute("refY", "3");
  marker.setAttribute("orient", "auto");
  const tip = document.createElementNS(SVG_NS, "path");
  tip.setAttribute("d", "M0,0 L7,3 L0,6 z");
  marker.appendChild(tip);
  svg.appendChild(marker);

  const pos = new Map(model.vertices.map((v) => [v.index, v]));
  for (const arrow of model.arrows) {
    const a = pos.get(arrow.from)!;
    const b = pos.get(arrow.to)!;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(a.x));
    line.setAttribute("y1", String(a.y));
    line.setAttribute("x2", String(b.x));
    line.setAttribute("y2", String(b.y));
    line.setAttribute("stroke", "#555");
    line.setAttribute("marker-end", "url(#arrowhead)");
    if (arrow.weight > 1) {
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String((a.x + b.x) / 2));
      label.setAttribute("y", String((a.y + b.y) / 2 - 4));
      label.textContent = String(arrow.weight);
      svg.appendChild(label);
    }
    svg.appendChild(line);
  }
  for (const v of model.vertices) {
    const group = document.createElementNS(SVG_NS, "g");
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(v.x));
    circle.setAttribute("cy", String(v.y));
    circle.setAttribute("r", "22");
    circle.setAttribute("fill", v.frozen ? "#dfe7f5" : "#f8d8a8");
    circle.setAttribute("stroke", v.frozen ? "#6b7fa8" : "#c07820");
    circle.setAttribute("stroke-dasharray", v.frozen ? "4 3" : "");
    if (!v.frozen && !state.busy) {
      circle.setAttribute("cursor", "pointer");
      circle.addEventListener("click", () => void state.mutateAt(v.index));
    } else if (v.frozen) {
      circle.addEventListener("click", () => {
        state.hint = `vertex ${v.index} is frozen`;
        refresh();
      });
    }
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(v.x));
    label.setAttribute("y", String(v.y + 4));
    label.setAttribute("text-anchor", "middle");
    label.setAttribute("font-size", "11");
    label.textContent = v.label;
    group.appendChild(circle);
    group.appendChild(label);
    svg.appendChild(group);
  }
  mount.appendChild(svg);
}

function renderInspector(state: ViewState, mount: HTMLElement): void {
  mount.textContent = "";
  if (!state.seed) return;
  const list = el("dl");
  for (let i = 1; i <= state.seed.n; i++) {
    const term = el("dt", {}, `${state.seed.labels[i - 1]}${i > state.seed.m ? " (frozen)" : ""}`);
    const value = el("dd", {}, formatVariable(state.seed, i));
    list.appendChild(term);
    list.appendChild(value);
  }
  mount.appendChild(list);
}

function renderTrail(state: ViewState, mount: HTMLElement): void {
  mount.textContent = "";
  if (!state.seed) return;
  const history = state.seed.history ?? [];
  mount.appendChild(
    el("p", {}, history.length ? `history: ${history.join(" → ")}` : "history: (initial)"),
  );
  mount.appendChild(el("p", {}, `seed checksum: ${state.displayChecksum()}`));
}

function renderStrata(state: ViewState, mount: HTMLElement): void {
  mount.textContent = "";
  if (!state.strata) return;
  mount.appendChild(el("p", {}, `${state.strata.length} strata`));
  const list = el("ul");
  for (const s of state.strata.slice(0, 40)) {
    const tip = s.tip.length ? `{${s.tip.join(",")}}` : "∅";
    list.appendChild(el("li", {}, `tip ${tip} — center rank ${s.rank}`));
  }
  if (state.strata.length > 40) {
    list.appendChild(el("li", {}, `… ${state.strata.length - 40} more`));
  }
  mount.appendChild(list);
}

const state = new ViewState(new ApiClient(""));
let refresh: () => void = () => undefined;

function wire(): void {
  const app = document.getElementById("app")!;
  const form = el("div", { class: "builder" });
  const wordInput = el("input", { placeholder: "1,2,1,-1,-2,-1", size: "24" });
  const rankInput = el("input", { placeholder: "2", size: "4" });
  const buildButton = el("button", {}, "Build double Bruhat seed");
  const error = el("span", { class: "error" });
  form.append("word: ", wordInput, " rank: ", rankInput, " ", buildButton, error);

  const toolbar = el("div", { class: "toolbar" });
  const undoButton = el("button", {}, "Undo");
  const strataButton = el("button", {}, "Load strata");
  const hint = el("span", { class: "hint" });
  toolbar.append(undoButton, " ", strataButton, hint);

  const quiver = el("div", { id: "quiver" });
  const inspector = el("div", { id: "inspector" });
  const trail = el("div", { id: "trail" });
  const strata = el("div", { id: "strata" });
  app.append(form, toolbar, quiver, inspector, trail, strata);

  buildButton.addEventListener("click", () => {
    void state.buildBruhat(wordInput.value, parseInt(rankInput.value || "0", 10));
  });
  undoButton.addEventListener("click", () => void state.undo());
  strataButton.addEventListener("click", () => void state.loadStrata());

  refresh = () => {
    error.textContent = state.validationError;
    hint.textContent = state.hint;
    buildButton.toggleAttribute("disabled", state.busy);
    undoButton.toggleAttribute("disabled", state.busy || !state.canUndo());
    strataButton.toggleAttribute("disabled", state.busy || !state.sessionId);
    renderQuiver(state, quiver);
    renderInspector(state, inspector);
    renderTrail(state, trail);
    renderStrata(state, strata);
  };
  state.subscribe(refresh);
  refresh();
}

if (typeof document !== "undefined") {
  wire();
}
