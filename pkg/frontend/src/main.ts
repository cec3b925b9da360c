import { ApiClient } from "./api.js";
import { ExplorerController } from "./controller.js";
import { renderQuiver, renderStatus, renderToasts } from "./render.js";
import type { Mode } from "./types.js";

const api = new ApiClient("", "default");
const ctl = new ExplorerController(api);

const svg = document.getElementById("scene") as unknown as SVGSVGElement;
const status = document.getElementById("status") as HTMLElement;
const toasts = document.getElementById("toasts") as HTMLElement;
const modeButtons = document.querySelectorAll<HTMLButtonElement>("button[data-mode]");
const undoButton = document.getElementById("undo") as HTMLButtonElement;
const fileInput = document.getElementById("file") as HTMLInputElement;

ctl.onChange = () => {
  renderQuiver(svg, ctl);
  renderStatus(status, ctl);
  renderToasts(toasts, ctl);
  modeButtons.forEach((b) => {
    b.classList.toggle("active", b.dataset.mode === ctl.mode);
  });
  undoButton.disabled = (ctl.state?.undoDepth ?? 0) === 0;
};

modeButtons.forEach((b) => {
  b.addEventListener("click", () => ctl.setMode(b.dataset.mode as Mode));
});
undoButton.addEventListener("click", () => void ctl.undo());
fileInput.addEventListener("change", () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  void file.text().then((text) => ctl.load(JSON.parse(text)));
});

void ctl.refresh();
