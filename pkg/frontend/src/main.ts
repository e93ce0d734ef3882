import { ApiClient } from './api';
import { Store } from './state';
import { AssessmentForm } from './views/assessmentForm';
import { BranchView } from './views/branchView';
import { MatrixView } from './views/matrixView';
import { WhatIfPanel } from './views/whatifPanel';

function mount(): void {
  const api = new ApiClient();
  const store = new Store();

  const form = new AssessmentForm(document.getElementById('assessment')!, api, store);
  const matrix = new MatrixView(document.getElementById('matrix')!, api, store);
  const branches = new BranchView(document.getElementById('branches')!, api, store);
  const whatIf = new WhatIfPanel(document.getElementById('whatif')!, api, store);

  void form.init();

  document.getElementById('build-matrix')!.addEventListener('click', () => {
    void matrix.buildForCurrentSnapshot();
    void whatIf.init();
  });

  document.getElementById('compare-branches')!.addEventListener('click', () => {
    const incident = (document.getElementById('branch-incident') as HTMLInputElement).value;
    const raw = (document.getElementById('branch-capabilities') as HTMLInputElement).value;
    const units = raw.split(',').map((part) => {
      const [org_unit, capability] = part.split('=').map((s) => s.trim());
      return { org_unit, capability };
    });
    void branches.compare(incident, units);
  });

  store.subscribe((state) => {
    const banner = document.getElementById('status-banner')!;
    banner.textContent = state.error ?? (state.pending ? 'working…' : '');
    banner.className = state.error ? 'error' : '';
  });
}

document.addEventListener('DOMContentLoaded', mount);
