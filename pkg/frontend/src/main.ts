// Wiring: one store, three views, a notice line and an undo button.

import { ApiClient, ArcSet } from "./api.js";
import { renderInfgon } from "./infgonView.js";
import { renderPolygon } from "./polygonView.js";
import { SessionStore, ViewState } from "./state.js";
import { renderStrip } from "./stripView.js";

export function mount(root: HTMLElement, store: SessionStore): void {
  root.innerHTML = `
    <div class="toolbar">
      <label>n <input type="number" id="n-input" min="1" max="10" value="2"></label>
      <button id="start-polygon">polygon session</button>
      <button id="start-infgon">infinity-gon demo</button>
      <button id="start-projectives">projectives demo</button>
      <button id="undo" disabled>undo</button>
      <span id="notice" role="status"></span>
    </div>
    <div class="views">
      <div id="model-view"></div>
      <div id="strip-view"></div>
    </div>
  `;
  const notice = root.querySelector<HTMLElement>("#notice")!;
  const modelView = root.querySelector<HTMLElement>("#model-view")!;
  const stripView = root.querySelector<HTMLElement>("#strip-view")!;
  const undoBtn = root.querySelector<HTMLButtonElement>("#undo")!;
  const nInput = root.querySelector<HTMLInputElement>("#n-input")!;

  root.querySelector("#start-polygon")!.addEventListener("click", () => {
    void store.start("polygon", { n: Number(nInput.value) });
  });
  root.querySelector("#start-infgon")!.addEventListener("click", () => {
    const arcs: ArcSet = {
      finite: [
        [0, 2],
        [0, 3],
      ],
      leftTails: [[0, -2]],
      rightTails: [[3, 5]],
    };
    void store.start("infgon", { arcs });
  });
  root.querySelector("#start-projectives")!.addEventListener("click", () => {
    void store.start("projectives");
  });
  undoBtn.addEventListener("click", () => void store.undo());

  const render = (state: ViewState) => {
    notice.textContent = state.notice ?? "";
    undoBtn.disabled = state.undoStack.length === 0 || state.pending;
    if (state.kind === "polygon" && state.current && "diagonals" in state.current) {
      renderPolygon(modelView, state.n, state.current.diagonals, state.embedding, {
        onDiagonalClick: (label) => void store.mutate(label),
      });
    } else if (state.kind === "infgon" && state.current && "finite" in state.current) {
      renderInfgon(modelView, state.current as ArcSet, {
        onArcClick: (label) => void store.mutate(label),
        onTailClick: () => {
          notice.textContent = "not mutable here: tail arcs mutate only via the engine's continuous story";
        },
      });
    } else {
      modelView.textContent = state.kind ? "" : "start a session";
    }
    renderStrip(stripView, state.embedding, state.lastRectangle);
  };

  store.subscribe(render);
  render(store.state);
}

export function bootstrap(): void {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app");
  const base = (window as unknown as { ECLUSTER_API?: string }).ECLUSTER_API ?? "http://127.0.0.1:8787";
  mount(root, new SessionStore(new ApiClient(base)));
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  bootstrap();
}
