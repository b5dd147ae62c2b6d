/**
 * Bootstrap: wire the store, client, and renderer together.
 *
 * The service base URL defaults to same-origin and can be overridden with
 * ?service=http://host:port for local development against `serve`.
 */

import { AnalysisClient } from './api.js';
import { DEFAULT_SWEEP, PRESETS } from './presets.js';
import { ExplorerStore } from './state.js';
import { ExplorerUI } from './render.js';

function serviceBaseUrl(): string {
  const override = new URLSearchParams(window.location.search).get('service');
  return override ?? '';
}

function start(): void {
  const root = document.getElementById('app');
  if (!root) {
    throw new Error('missing #app container');
  }
  const client = new AnalysisClient(serviceBaseUrl());
  const store: ExplorerStore = new ExplorerStore(
    client,
    PRESETS['paper-defaults'],
    () => ui.render(store.viewModel()),
  );
  const ui = new ExplorerUI(root, store, DEFAULT_SWEEP);
  ui.build();
  void store.refresh();
  void store.runSweep(DEFAULT_SWEEP);
}

start();
