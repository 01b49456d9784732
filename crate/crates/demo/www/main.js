import init, { runScript, grid, solvePair } from './pkg/cutforge_demo.js';

const $ = (id) => document.getElementById(id);

function show(pre, text, isError) {
  pre.textContent = text;
  pre.className = isError ? 'err' : '';
}

// one dot per window point; rows come top first
function picture(data, caption) {
  const fig = document.createElement('figure');
  if (data.error) {
    fig.textContent = data.error;
    fig.className = 'err';
    return fig;
  }
  const cols = data.xs.length, rows = data.ys.length;
  const cell = Math.max(4, Math.floor(260 / Math.max(cols, rows)));
  const canvas = document.createElement('canvas');
  canvas.width = cols * cell;
  canvas.height = rows * cell;
  const ctx = canvas.getContext('2d');
  for (let r = 0; r < rows; r++) {
    for (let c = 0; c < cols; c++) {
      const inside = data.cells[r * cols + c] === '1';
      const axis = data.xs[c] === '0' || data.ys[r] === '0';
      ctx.beginPath();
      ctx.arc(c * cell + cell / 2, r * cell + cell / 2, cell * 0.32, 0, 2 * Math.PI);
      if (inside) {
        ctx.fillStyle = axis ? '#1d4f91' : '#3a7bd5';
        ctx.fill();
      } else {
        ctx.strokeStyle = axis ? '#999' : '#ccc';
        ctx.stroke();
      }
    }
  }
  const cap = document.createElement('figcaption');
  cap.textContent = caption ? `${caption}: ${data.segment}` : data.segment;
  fig.append(canvas, cap);
  return fig;
}

function run() {
  const res = JSON.parse(runScript($('src').value));
  const text = res.lines.join('\n');
  show($('out'), res.error ? (text ? text + '\n' : '') + res.error : text, !!res.error);
}

function draw() {
  const data = JSON.parse(grid($('pgroup').value, $('pexpr').value, Number($('pradius').value), 2));
  $('pic').replaceChildren(picture(data));
}

function solve() {
  const res = JSON.parse(solvePair($('sgroup').value, $('s1').value, $('s2').value, 5));
  if (res.error) {
    show($('sout'), res.error, true);
    $('spics').replaceChildren();
    return;
  }
  show($('sout'), res.outcome, false);
  const [p1, p2, pt] = res.pictures;
  $('spics').replaceChildren(picture(p1, 'S1'), picture(p2, 'S2'), picture(pt, 'best T'));
}

await init();
$('run').onclick = run;
$('draw').onclick = draw;
$('solve').onclick = solve;
run();
draw();
solve();
