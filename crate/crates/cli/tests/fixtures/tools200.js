// Inventory dashboard helpers
const list = [1, 2, 3, 4, 5];

function helper1(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 1;
}

function helper2(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 2;
}

function helper3(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 3;
}

const cubes = ["__watch", list.map(n => n ** 3)][1];
const total = ["__watch", helper1(list, 2)][1] + 1;

function helper4(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 4;
}

function helper5(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 5;
}

function helper6(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 6;
}

function helper7(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 7;
}

function render(target) {
  target.title = __VI_PLACEHOLDER_title;
  target.body = __VI_PLACEHOLDER_page_body;
  return target;
}

function helper8(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 8;
}

function helper9(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 9;
}

function helper10(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 10;
}

function helper11(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 11;
}

let brightness = ["slider", 0, 255, 1, 73][1];
const rows = db.query(sql`SELECT * FROM \`events\` WHERE id = 123`);

function helper12(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 12;
}

function helper13(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 13;
}

function helper14(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 14;
}

function helper15(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 15;
}

function helper16(items, factor) {
  let total = 0;
  for (let i = 0; i < items.length; i++) {
    total = total + items[i] * factor;
  }
  return total + 16;
}

console.log(["__watch", rows.length * brightness][1]);
// end of fixture line 145
// end of fixture line 146
// end of fixture line 147
// end of fixture line 148
// end of fixture line 149
// end of fixture line 150
// end of fixture line 151
// end of fixture line 152
// end of fixture line 153
// end of fixture line 154
// end of fixture line 155
// end of fixture line 156
// end of fixture line 157
// end of fixture line 158
// end of fixture line 159
// end of fixture line 160
// end of fixture line 161
// end of fixture line 162
// end of fixture line 163
// end of fixture line 164
// end of fixture line 165
// end of fixture line 166
// end of fixture line 167
// end of fixture line 168
// end of fixture line 169
// end of fixture line 170
// end of fixture line 171
// end of fixture line 172
// end of fixture line 173
// end of fixture line 174
// end of fixture line 175
// end of fixture line 176
// end of fixture line 177
// end of fixture line 178
// end of fixture line 179
// end of fixture line 180
// end of fixture line 181
// end of fixture line 182
// end of fixture line 183
// end of fixture line 184
// end of fixture line 185
// end of fixture line 186
// end of fixture line 187
// end of fixture line 188
// end of fixture line 189
// end of fixture line 190
// end of fixture line 191
// end of fixture line 192
// end of fixture line 193
// end of fixture line 194
// end of fixture line 195
// end of fixture line 196
// end of fixture line 197
// end of fixture line 198
// end of fixture line 199
// end of fixture line 200
