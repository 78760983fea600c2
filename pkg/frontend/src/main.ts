import { ApiClient } from "./api.js";
import { App } from "./app.js";

/** API base: ?api=http://host:port, defaulting to the page origin. */
function apiBase(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get("api") ?? "";
}

const root = document.getElementById("app");
if (root) {
  const app = new App(root, new ApiClient(apiBase()));
  void app.start();
}
